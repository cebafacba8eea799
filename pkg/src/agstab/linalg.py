"""Dense linear algebra over GF(2^r): reduced row echelon form, rank,
nullspace and small solves.

Matrices are sequences of rows with integer entries (field indices).  For
fields with at most 256 elements the elimination loops run on numpy uint8
arrays through the field's multiplication table; larger fields use scalar
arithmetic.  Pivoting is leftmost-column, first-nonzero-row, which makes
every reduced form canonical for its row space.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gf import GF2m

Rows = tuple[tuple[int, ...], ...]


def _as_array(field: GF2m, rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    a = np.zeros((len(rows), width), dtype=np.uint8)
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ValueError(f"row {i} has length {len(r)}, expected {width}")
        a[i] = r
    if a.size and int(a.max()) >= field.q:
        raise ValueError(f"entry out of range for {field}")
    return a


def _rref_np(field: GF2m, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    mul = field.mul_table
    nrows, width = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = mul[field.inv(lead)][M[r]]
        col = M[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            M[hit] ^= mul[col[hit][:, None], M[r][None, :]]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rref_scalar(field: GF2m, rows: list[list[int]], width: int) -> tuple[list[list[int]], list[int]]:
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            inv = field.inv(lead)
            rows[r] = [field.mul(inv, v) for v in rows[r]]
        for k in range(nrows):
            f = rows[k][c]
            if k != r and f:
                rk, rr = rows[k], rows[r]
                rows[k] = [rk[i] ^ field.mul(f, rr[i]) for i in range(width)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(field: GF2m, rows: Sequence[Sequence[int]], width: int) -> tuple[Rows, tuple[int, ...]]:
    """Canonical reduced row echelon form of the row space, plus pivot columns."""
    if not rows:
        return (), ()
    if field.q <= 256:
        M, pivots = _rref_np(field, _as_array(field, rows, width))
        return tuple(tuple(int(v) for v in row) for row in M), tuple(pivots)
    work = [list(map(int, r)) for r in rows]
    for i, r in enumerate(work):
        if len(r) != width:
            raise ValueError(f"row {i} has length {len(r)}, expected {width}")
    out, pivots = _rref_scalar(field, work, width)
    return tuple(tuple(r) for r in out), tuple(pivots)


def rank(field: GF2m, rows: Sequence[Sequence[int]], width: int) -> int:
    return len(rref(field, rows, width)[0])


def nullspace(field: GF2m, rows: Sequence[Sequence[int]], width: int) -> Rows:
    """Canonical basis of {x : M x^T = 0}, as rref rows."""
    R, pivots = rref(field, rows, width)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = R[i][f]  # -R[i][f] in characteristic 2
        basis.append(v)
    out, _ = rref(field, basis, width)
    return out


def row_in_span(field: GF2m, rref_rows: Rows, pivots: Sequence[int], row: Sequence[int]) -> bool:
    """True when ``row`` reduces to zero against a canonical rref basis."""
    v = list(row)
    for i, p in enumerate(pivots):
        f = v[p]
        if f:
            rr = rref_rows[i]
            v = [v[j] ^ field.mul(f, rr[j]) for j in range(len(v))]
    return not any(v)


def solve(
    field: GF2m,
    rows: Sequence[Sequence[int]],
    width: int,
    rhs: Sequence[int],
) -> tuple[tuple[int, ...] | None, Rows]:
    """Solve M x^T = rhs.

    Returns (particular solution with free coordinates zero, canonical
    nullspace basis); the particular solution is None when the system is
    inconsistent.
    """
    if len(rhs) != len(rows):
        raise ValueError("right-hand side length does not match the row count")
    aug = [list(r) + [s] for r, s in zip(rows, rhs)]
    R, pivots = rref(field, aug, width + 1)
    if width in pivots:
        return None, nullspace(field, rows, width)
    x = [0] * width
    for i, p in enumerate(pivots):
        x[p] = R[i][width]
    return tuple(x), nullspace(field, rows, width)


def identity_rows(width: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(width)) for i in range(width))


def invert_matrix(field: GF2m, rows: Sequence[Sequence[int]]) -> Rows:
    """Inverse of a square matrix over the field; ValueError when singular."""
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(field, aug, 2 * n)
    if list(pivots[:n]) != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular over " + repr(field))
    return tuple(tuple(row[n:]) for row in R)
