"""Subspaces of F_q^{2n} under the standard symplectic form.

The form pairs coordinate i with coordinate n+i:

    <x, y> = sum_i x_i y_{n+i} - sum_i x_{n+i} y_i

(the subtraction is addition here, everything is characteristic 2), and the
weight of a vector counts the pairs (x_i, x_{n+i}) that are not both zero.
A basis is always kept in canonical reduced row echelon form so that any
two equal subspaces compare bit for bit.

The distance searches are the hot paths: exact relative minimum weight by
full codeword enumeration (capped), and a weight-budget sweep over ambient
vectors for codes too large to enumerate.  Both may be partitioned over
disjoint index ranges by independent workers since all inputs are
immutable; the implementation here is single-threaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import linalg
from .gf import GF2m

ENUMERATION_CAP = 1 << 24


@dataclass(frozen=True)
class CodeBasis:
    """Canonical (rref) basis of a subspace of F_q^width.

    rows are tuples of field indices; rank == len(rows).  Instances are
    immutable and hashable, and equality is bit-exact equality of the
    canonical form.
    """

    field: GF2m
    width: int
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, field: GF2m, rows: Sequence[Sequence[int]], width: int | None = None) -> "CodeBasis":
        if width is None:
            if not rows:
                raise ValueError("width is required for an empty row list")
            width = len(rows[0])
        reduced, pivots = linalg.rref(field, rows, width)
        return cls(field, width, reduced, pivots)

    @classmethod
    def zero(cls, field: GF2m, width: int) -> "CodeBasis":
        return cls(field, width, (), ())

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains_row(self, row: Sequence[int]) -> bool:
        return linalg.row_in_span(self.field, self.rows, self.pivots, row)

    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8).reshape(self.rank, self.width)


def row_reduce(field: GF2m, rows: Sequence[Sequence[int]], width: int | None = None) -> tuple[CodeBasis, int]:
    """Canonical rref basis of the span of ``rows`` and its rank."""
    basis = CodeBasis.from_rows(field, rows, width)
    return basis, basis.rank


def _check_pair(field: GF2m, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) % 2:
        raise ValueError(f"symplectic vectors have even length, got {len(x)}")
    return len(x) // 2


def symplectic_form(field: GF2m, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = sum x_i y_{n+i} - sum x_{n+i} y_i (signs collapse, char 2)."""
    n = _check_pair(field, x, y)
    acc = 0
    for i in range(n):
        acc ^= field.mul(x[i], y[n + i]) ^ field.mul(x[n + i], y[i])
    return acc


def symplectic_weight(x: Sequence[int]) -> int:
    """Number of index pairs (i, n+i) with (x_i, x_{n+i}) != (0, 0)."""
    if len(x) % 2:
        raise ValueError(f"symplectic vectors have even length, got {len(x)}")
    n = len(x) // 2
    return sum(1 for i in range(n) if x[i] or x[n + i])


def hamming_weight(x: Sequence[int]) -> int:
    return sum(1 for v in x if v)


def swap_halves(x: Sequence[int]) -> tuple[int, ...]:
    """(x_1..x_n | x_{n+1}..x_{2n}) -> (x_{n+1}..x_{2n} | x_1..x_n)."""
    n = len(x) // 2
    return tuple(x[n:]) + tuple(x[:n])


def _dual_check_rows(basis: CodeBasis) -> tuple[tuple[int, ...], ...]:
    """Rows h' with <x, h> = x . h' (standard product) for each basis row h."""
    return tuple(swap_halves(row) for row in basis.rows)


def symplectic_dual(basis: CodeBasis) -> CodeBasis:
    """Basis of {x : <x, c> = 0 for all c in the row space}."""
    if basis.width % 2:
        raise ValueError("symplectic dual needs an even ambient length")
    if basis.rank == 0:
        rows = linalg.identity_rows(basis.width)
        return CodeBasis(basis.field, basis.width, rows, tuple(range(basis.width)))
    null = linalg.nullspace(basis.field, _dual_check_rows(basis), basis.width)
    reduced, pivots = linalg.rref(basis.field, null, basis.width)
    return CodeBasis(basis.field, basis.width, reduced, pivots)


def contains(outer: CodeBasis, inner: CodeBasis) -> bool:
    """True when every row of ``inner`` reduces to zero against ``outer``."""
    if outer.field != inner.field or outer.width != inner.width:
        raise ValueError("bases live in different ambient spaces")
    return all(outer.contains_row(row) for row in inner.rows)


# ---------------------------------------------------------------------------
# Relative minimum symplectic weight
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinWeightResult:
    """Outcome of a minimum-weight search over C \\ D.

    status is "exact" (weight holds the minimum), "at-least" (no vector of
    weight <= budget exists; floor = budget + 1 is a lower bound), or
    "empty" (C equals D, the search set is empty).
    """

    status: str
    weight: int | None = None
    floor: int | None = None


def _complement_rows(C: CodeBasis, D: CodeBasis) -> list[tuple[int, ...]]:
    """Rows of C extending a basis of D to a basis of C."""
    field = C.field
    stack = [list(r) for r in D.rows]
    have = D.rank
    out = []
    for row in C.rows:
        probe = stack + [list(row)]
        if linalg.rank(field, probe, C.width) > have:
            stack = probe
            have += 1
            out.append(row)
    return out


def _enumerate_min_weight(C: CodeBasis, D: CodeBasis, cap: int) -> int:
    """Exact min symplectic weight over C \\ D by full enumeration.

    Codewords are generated as u * D_rows + v * E_rows with E a complement
    of D inside C; restricting to v != 0 enumerates exactly C \\ D.
    """
    field = C.field
    if field.q > 256:
        raise ValueError("exact enumeration requires a table-backed field (q <= 256)")
    q = field.q
    rows = list(D.rows) + _complement_rows(C, D)
    k = len(rows)
    total = q ** k
    if total > cap:
        raise ValueError(f"q^dim = {total} exceeds the enumeration cap {cap}")
    mul = field.mul_table
    width = C.width
    n = width // 2
    R = np.array(rows, dtype=np.uint8)
    start = q ** D.rank  # first message index with a nonzero complement digit
    best = n + 1
    chunk = 1 << 16
    powers = [q ** i for i in range(k)]
    for lo in range(start, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        cw = np.zeros((hi - lo, width), dtype=np.uint8)
        for i in range(k):
            digits = ((idx // powers[i]) % q).astype(np.uint8)
            if digits.any():
                cw ^= mul[digits[:, None], R[i][None, :]]
        w = ((cw[:, :n] != 0) | (cw[:, n:] != 0)).sum(axis=1)
        m = int(w.min())
        if m < best:
            best = m
        if best == 1:
            break
    return best


def _syndrome_columns(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """check[r, j] with <x, rows[r]> = sum_j x_j * check[r, j]."""
    return np.array([swap_halves(r) for r in rows], dtype=np.uint8)


def _pair_value_chunks(q: int, w: int, chunk: int = 1 << 18):
    """Chunks of all w-tuples of nonzero coordinate pairs over GF(q).

    Pair values run over 1 .. q^2 - 1 (value v encodes the pair
    (v // q, v % q), never (0, 0)).  Yields (X, Z) uint8 arrays of shape
    (<= chunk, w) holding the two halves of each pair.
    """
    base = q * q - 1
    total = base ** w
    powers = [base ** i for i in range(w)]
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        vals = np.empty((hi - lo, w), dtype=np.int64)
        for i in range(w):
            vals[:, i] = (idx // powers[i]) % base + 1
        yield (vals // q).astype(np.uint8), (vals % q).astype(np.uint8)


def _budget_min_weight(C: CodeBasis, D: CodeBasis, budget: int) -> MinWeightResult:
    """Sweep ambient vectors of symplectic weight 1..budget for one in C \\ D."""
    field = C.field
    if field.q > 256:
        raise ValueError("the budget sweep requires a table-backed field (q <= 256)")
    q = field.q
    mul = field.mul_table
    n = C.width // 2
    in_c = _syndrome_columns(symplectic_dual(C).rows)
    not_d = _syndrome_columns(symplectic_dual(D).rows)
    for w in range(1, budget + 1):
        for X, Z in _pair_value_chunks(q, w):
            for support in combinations(range(n), w):
                # membership in C: every dual check must vanish; prune per row
                ax, az = X, Z
                dead = False
                for r in range(in_c.shape[0]):
                    acc = np.zeros(len(ax), dtype=np.uint8)
                    for p, i in enumerate(support):
                        acc ^= mul[ax[:, p], in_c[r, i]]
                        acc ^= mul[az[:, p], in_c[r, n + i]]
                    keep = acc == 0
                    if not keep.any():
                        dead = True
                        break
                    ax, az = ax[keep], az[keep]
                if dead:
                    continue
                outside = np.zeros(len(ax), dtype=bool)
                for r in range(not_d.shape[0]):
                    acc = np.zeros(len(ax), dtype=np.uint8)
                    for p, i in enumerate(support):
                        acc ^= mul[ax[:, p], not_d[r, i]]
                        acc ^= mul[az[:, p], not_d[r, n + i]]
                    outside |= acc != 0
                if outside.any():
                    return MinWeightResult(status="exact", weight=w)
    return MinWeightResult(status="at-least", floor=budget + 1)


def relative_min_weight(
    C: CodeBasis,
    D: CodeBasis,
    budget: int | None = None,
    mode: str = "auto",
    cap: int = ENUMERATION_CAP,
) -> MinWeightResult:
    """Minimum symplectic weight over C \\ D.

    mode "auto" enumerates codewords exactly whenever q^dim(C) <= cap and
    otherwise requires a budget; "exact" and "budget" force one strategy
    (the latter is how the two are cross-checked against each other).
    """
    if not contains(C, D):
        raise ValueError("D must be a subspace of C")
    if C.rank == D.rank:
        return MinWeightResult(status="empty")
    enumerable = C.field.q ** C.rank <= cap
    if mode == "exact" or (mode == "auto" and enumerable):
        return MinWeightResult(status="exact", weight=_enumerate_min_weight(C, D, cap))
    if mode not in ("auto", "budget"):
        raise ValueError(f"unknown mode {mode!r}")
    if budget is None:
        raise ValueError(
            f"q^dim = {C.field.q ** C.rank} exceeds the enumeration cap; a weight budget is required"
        )
    return _budget_min_weight(C, D, budget)


def min_hamming_weight(C: CodeBasis, cap: int = ENUMERATION_CAP) -> int:
    """Exact minimum Hamming weight over the nonzero codewords of C."""
    field = C.field
    if field.q > 256:
        raise ValueError("exact enumeration requires a table-backed field (q <= 256)")
    if C.rank == 0:
        raise ValueError("the zero code has no nonzero codeword")
    q = field.q
    total = q ** C.rank
    if total > cap:
        raise ValueError(f"q^dim = {total} exceeds the enumeration cap {cap}")
    mul = field.mul_table
    R = np.array(C.rows, dtype=np.uint8)
    best = C.width + 1
    powers = [q ** i for i in range(C.rank)]
    chunk = 1 << 16
    for lo in range(1, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        cw = np.zeros((hi - lo, C.width), dtype=np.uint8)
        for i in range(C.rank):
            digits = ((idx // powers[i]) % q).astype(np.uint8)
            if digits.any():
                cw ^= mul[digits[:, None], R[i][None, :]]
        m = int((cw != 0).sum(axis=1).min())
        if m < best:
            best = m
        if best == 1:
            break
    return best


# ---------------------------------------------------------------------------
# Stabilizer parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilizerParams:
    """[[n, k, d]] data extracted from a self-orthogonal-containing space.

    d_exact is set when a search established the exact minimum over the
    difference C \\ C^perp; d_lower carries the best known lower bound.
    For k = 0 the difference set is empty and d is undefined; the minimum
    nonzero weight of C itself is reported separately as
    zero_k_min_weight, which is a reporting convention, not a distance.
    """

    n: int
    k: int
    d_lower: int | None = None
    d_exact: int | None = None
    empty_difference: bool = False
    zero_k_min_weight: int | None = None

    @property
    def d(self) -> int | None:
        return self.d_exact if self.d_exact is not None else self.d_lower

    @property
    def t(self) -> int | None:
        """Correctable errors, floor((d - 1) / 2)."""
        d = self.d
        return None if d is None else (d - 1) // 2


def stabilizer_params(
    C: CodeBasis,
    distance: str = "exact",
    budget: int | None = None,
    d_lower: int | None = None,
    cap: int = ENUMERATION_CAP,
) -> StabilizerParams:
    """Extract [[n, k, d]] from C, which must satisfy C >= C^perp.

    distance selects how d is established: "none" records only the supplied
    lower bound, "exact" enumerates, "budget" sweeps weights <= budget and
    upgrades the bound when the sweep comes back empty.
    """
    if C.width % 2:
        raise ValueError("ambient length must be even")
    dual = symplectic_dual(C)
    if not contains(C, dual):
        raise ValueError("not symplectically self-orthogonal-containing: C does not contain its dual")
    n = C.width // 2
    k = C.rank - n
    if k == 0:
        info = None
        if distance != "none":
            res = relative_min_weight(C, CodeBasis.zero(C.field, C.width), budget=budget,
                                      mode="auto" if distance == "exact" else "budget", cap=cap)
            info = res.weight
        return StabilizerParams(n=n, k=k, d_lower=d_lower, empty_difference=True,
                                zero_k_min_weight=info)
    d_exact = None
    if distance == "exact":
        res = relative_min_weight(C, dual, budget=budget, cap=cap)
        if res.status == "exact":
            d_exact = res.weight
        elif res.status == "at-least":
            d_lower = max(d_lower or 0, res.floor) or None
    elif distance == "budget":
        if budget is None:
            raise ValueError("budget distance mode needs a budget")
        res = relative_min_weight(C, dual, budget=budget, mode="budget", cap=cap)
        if res.status == "exact":
            d_exact = res.weight
        else:
            d_lower = max(d_lower or 0, res.floor) or None
    elif distance != "none":
        raise ValueError(f"unknown distance mode {distance!r}")
    if d_exact is not None and d_lower is not None and d_exact < d_lower:
        raise ValueError(
            f"exact distance {d_exact} violates the claimed lower bound {d_lower}"
        )
    return StabilizerParams(n=n, k=k, d_lower=d_lower, d_exact=d_exact)
