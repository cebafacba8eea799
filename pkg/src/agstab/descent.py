"""Descent of symplectic codes to a subfield.

A code C inside GF(q^m)^{2n} that contains its symplectic dual is mapped
to a code gamma(C) inside GF(q)^{2mn} with the same property and at least
the same relative minimum weight.  The map expands the left half of every
vector through the coordinate map of a chosen GF(q)-basis {a_1 .. a_m} of
GF(q^m) and the right half through the companion map built from the Gram
matrix M[i][j] = Tr(a_i a_j) of that basis:

    alpha(x) = x_1 a_1 + ... + x_m a_m
    beta(x)  = (a_1 .. a_m) M x

gamma applies alpha^-1 blockwise to coordinates 1..n and beta^-1 to
coordinates n+1..2n, keeping the (left | right) pairing layout, so the
descended vector is again symplectic with n' = m n.

The identity that drives distance and orthogonality preservation is a
twisted trace compatibility: for the bases handled here there is a fixed
multiplier mu in GF(q^m) with

    <gamma(u), gamma(v)> over GF(q)  =  Tr(mu * <u, v>) over GF(q^m),

so symplectic orthogonality survives descent.  The multiplier depends on
the basis (it is omega for the basis {1, omega} of GF(4) over GF(2), not
1); it is solved for at construction time and exposed as ``twist``.  For
a basis where no such multiplier exists the descent is still computed,
and the self-orthogonality postcondition is then verified explicitly and
raised on failure instead of being assumed.
"""

from __future__ import annotations

from typing import Sequence

from .gf import GF2m, SubfieldEmbedding, invert_bit_matrix, solve_bit_system
from .linalg import invert_matrix
from .symplectic import CodeBasis, contains, symplectic_dual


class DescentBasis:
    """A GF(q)-basis of GF(q^m) with its trace Gram matrix and inverse.

    The default basis is the powers {1, g, .., g^(m-1)} of the extension
    field's canonical generator.
    """

    def __init__(self, sub: GF2m, ext: GF2m, basis: Sequence[int] | None = None) -> None:
        self.view = SubfieldEmbedding(sub, ext)
        self.sub = sub
        self.ext = ext
        self.m = self.view.m
        if basis is None:
            basis = [ext.pow(ext.generator, i) for i in range(self.m)]
        self.basis = tuple(basis)
        self.gram = self.view.gram_matrix(self.basis)
        self.gram_inv = invert_matrix(sub, self.gram)  # raises when degenerate
        # GF(2)-linear inverse of the alpha coordinate map
        self._alpha_inv_rows = invert_bit_matrix(
            self.view.coordinate_columns(self.basis), ext.degree
        )
        self.twist = self._solve_twist()

    # -- the two coordinate maps ------------------------------------------

    def alpha(self, coords: Sequence[int]) -> int:
        """alpha(x) = sum embed(x_i) * basis_i, a GF(q^m) element index."""
        self._check_coords(coords)
        acc = 0
        for c, a in zip(coords, self.basis):
            acc ^= self.ext.mul(self.view.embed(c), a)
        return acc

    def alpha_inv(self, y: int) -> tuple[int, ...]:
        """Coordinates of y in the basis, as subfield element indices."""
        bits = [(row & y).bit_count() & 1 for row in self._alpha_inv_rows]
        r = self.sub.degree
        return tuple(
            sum(bits[i * r + t] << t for t in range(r)) for i in range(self.m)
        )

    def beta(self, coords: Sequence[int]) -> int:
        """beta(x) = alpha(M x), the Gram-twisted companion of alpha."""
        self._check_coords(coords)
        mixed = self._apply(self.gram, coords)
        return self.alpha(mixed)

    def beta_inv(self, y: int) -> tuple[int, ...]:
        return self._apply(self.gram_inv, self.alpha_inv(y))

    def _apply(self, matrix: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[int, ...]:
        out = []
        for row in matrix:
            acc = 0
            for mij, v in zip(row, vec):
                acc ^= self.sub.mul(mij, v)
            out.append(acc)
        return tuple(out)

    def _check_coords(self, coords: Sequence[int]) -> None:
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")

    # -- the trace-compatibility multiplier --------------------------------

    def _solve_twist(self) -> int | None:
        """mu with Tr(mu * a_i * a_j) = (M^-1)[i][j] for all i, j, if any."""
        ext, view = self.ext, self.view
        r = self.sub.degree
        equations = []
        for i in range(self.m):
            for j in range(i, self.m):
                prod = ext.mul(self.basis[i], self.basis[j])
                target = self.gram_inv[i][j]
                # trace(mu * prod) is GF(2)-linear in the bits of mu
                masks = [0] * r
                for t in range(ext.degree):
                    val = view.trace(ext.mul(1 << t, prod))
                    for bit in range(r):
                        if (val >> bit) & 1:
                            masks[bit] |= 1 << t
                for bit in range(r):
                    equations.append((masks[bit], (target >> bit) & 1))
        mu = solve_bit_system(equations, ext.degree)
        return mu or None  # 0 cannot satisfy an invertible Gram target


def self_dual_basis(sub: GF2m, ext: GF2m) -> tuple[int, ...]:
    """Lexicographically least trace-orthonormal basis of ext over sub.

    A basis with Gram matrix equal to the identity always exists in
    characteristic 2 (the twisted trace form is never alternating), and it
    makes the descent maps alpha and beta coincide, so the descended code
    provably inherits self-orthogonality (twist 1).  Found by depth-first
    search over element indices.
    """
    view = SubfieldEmbedding(sub, ext)
    m = view.m

    def extend(chosen: list[int]) -> list[int] | None:
        if len(chosen) == m:
            return chosen
        start = chosen[-1] + 1 if chosen else 1
        for cand in range(start, ext.q):
            if view.trace(ext.mul(cand, cand)) != 1:
                continue
            if any(view.trace(ext.mul(cand, c)) != 0 for c in chosen):
                continue
            got = extend(chosen + [cand])
            if got is not None:
                return got
        return None

    found = extend([])
    if found is None:
        raise AssertionError(f"no self-dual basis of {ext} over {sub} (unreachable in char 2)")
    return tuple(found)


def descend_vector(basis: DescentBasis, vec: Sequence[int]) -> tuple[int, ...]:
    """gamma of one vector: alpha^-1 on the left half, beta^-1 on the right."""
    if len(vec) % 2:
        raise ValueError("symplectic vectors have even length")
    n = len(vec) // 2
    left: list[int] = []
    right: list[int] = []
    for i in range(n):
        left.extend(basis.alpha_inv(vec[i]))
        right.extend(basis.beta_inv(vec[n + i]))
    return tuple(left) + tuple(right)


def descend_code(C: CodeBasis, basis: DescentBasis) -> CodeBasis:
    """gamma(C) as a canonical subfield code basis.

    Requires C to contain its symplectic dual; the descended code is checked
    to contain its own dual and to have dimension m * dim(C) over the
    subfield, and a ValueError is raised when either fails.
    """
    if C.field != basis.ext:
        raise ValueError(f"code is over {C.field}, basis descends from {basis.ext}")
    if C.rank == 0:
        return CodeBasis.zero(basis.sub, basis.m * C.width)
    if not contains(C, symplectic_dual(C)):
        raise ValueError("input code does not contain its symplectic dual")
    ext = basis.ext
    spanning = []
    for row in C.rows:
        for multiplier in basis.basis:
            scaled = [ext.mul(multiplier, v) for v in row]
            spanning.append(descend_vector(basis, scaled))
    down = CodeBasis.from_rows(basis.sub, spanning, basis.m * C.width)
    if down.rank != basis.m * C.rank:
        raise ValueError("descent lost rank; the coordinate maps are inconsistent")
    if not contains(down, symplectic_dual(down)):
        raise ValueError(
            "descended code does not contain its symplectic dual; "
            "the chosen basis breaks the orthogonality-preserving identity"
        )
    return down
