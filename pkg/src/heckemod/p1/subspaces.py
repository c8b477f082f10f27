"""Subspaces W of the fiber F(x)^n, described by defining functionals.

W = {w : phi_k(w) = 0 for all k} for r linearly independent functionals,
so W has codimension r.  Canonical descriptions are the reduced row
echelon forms of the r x n functional matrix; enumerating those lists
every subspace exactly once.
"""

from __future__ import annotations

from itertools import combinations, product

from ..algebra import gaussian_binomial
from ..errors import ValidationError


def rref_over(K, rows):
    """Row-reduce a matrix over a ResidueField; returns (rows, pivots)."""
    M = [list(r) for r in rows]
    ncols = len(M[0]) if M else 0
    pivots, row = [], 0
    for col in range(ncols):
        if row == len(M):
            break
        piv = next((i for i in range(row, len(M)) if not K.is_zero(M[i][col])), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = K.inv(M[row][col])
        M[row] = [K.mul(inv, c) for c in M[row]]
        for i in range(len(M)):
            if i != row and not K.is_zero(M[i][col]):
                f = M[i][col]
                M[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    return M[:row], pivots


def kernel_basis(K, rows, ncols):
    """Basis of {w : M w = 0} over the residue field K."""
    R, pivots = rref_over(K, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        w = [K.zero] * ncols
        w[f] = K.one
        for row, p in zip(R, pivots):
            w[p] = K.neg(row[f])
        basis.append(tuple(w))
    return basis


class FiberSubspace:
    """Codimension-r subspace of F(x)^n given by r functionals over F(x)."""

    __slots__ = ("point", "n", "r", "functionals")

    def __init__(self, point, n: int, functionals=()):
        K = point.residue
        rows = [tuple(K._pad(c) if not isinstance(c, int) else K.from_base(c) for c in row) for row in functionals]
        if any(len(row) != n for row in rows):
            raise ValidationError(f"each functional needs {n} entries")
        if rows:
            _, pivots = rref_over(K, rows)
            if len(pivots) != len(rows):
                raise ValidationError("defining functionals are linearly dependent")
        self.point = point
        self.n = n
        self.r = len(rows)
        self.functionals = tuple(rows)

    @classmethod
    def full(cls, point, n: int):
        """The whole fiber (r = 0)."""
        return cls(point, n, ())

    @classmethod
    def zero(cls, point, n: int):
        K = point.residue
        return cls(point, n, [[K.one if i == j else K.zero for j in range(n)] for i in range(n)])

    @classmethod
    def span(cls, point, vectors, n: int | None = None):
        """The subspace spanned by the given vectors of F(x)^n."""
        K = point.residue
        vectors = [tuple(K._pad(c) if not isinstance(c, int) else K.from_base(c) for c in v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValidationError("need n for the span of no vectors")
            n = len(vectors[0])
        return cls(point, n, kernel_basis(K, vectors, n))

    def canonical(self) -> "FiberSubspace":
        if not self.functionals:
            return self
        rows, _ = rref_over(self.point.residue, self.functionals)
        return FiberSubspace(self.point, self.n, rows)

    def basis(self):
        """A basis of W itself."""
        return kernel_basis(self.point.residue, list(self.functionals), self.n)

    def contains(self, w) -> bool:
        K = self.point.residue
        for row in self.functionals:
            acc = K.zero
            for a, b in zip(row, w):
                acc = K.add(acc, K.mul(a, b))
            if not K.is_zero(acc):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, FiberSubspace):
            return NotImplemented
        return (self.point, self.n) == (other.point, other.n) and (
            self.canonical().functionals == other.canonical().functionals
        )

    def __hash__(self):
        return hash((self.point, self.n, self.canonical().functionals))

    def __repr__(self):
        return f"FiberSubspace(n={self.n}, r={self.r}, at {self.point.render()})"


def subspace_count(point, n: int, r: int) -> int:
    return gaussian_binomial(n, r, point.residue_size)


def iter_subspaces(point, n: int, r: int):
    """All codimension-r subspaces, in canonical order.

    The order is: pivot column sets lexicographically, then free entries
    (row-major over the non-pivot columns right of each pivot) with each
    entry running through F(x) by index.
    """
    if not 0 <= r <= n:
        raise ValidationError(f"need 0 <= r <= n, got r={r}, n={n}")
    K = point.residue
    for pivots in combinations(range(n), r):
        slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in product(range(K.size), repeat=len(slots)):
            rows = [[K.zero] * n for _ in range(r)]
            for i, p in enumerate(pivots):
                rows[i][p] = K.one
            for (i, c), idx in zip(slots, values):
                rows[i][c] = K.element(idx)
            sub = FiberSubspace.__new__(FiberSubspace)
            sub.point, sub.n, sub.r = point, n, r
            sub.functionals = tuple(tuple(row) for row in rows)
            yield sub


def subspace_by_index(point, n: int, r: int, index: int) -> FiberSubspace:
    total = subspace_count(point, n, r)
    if not 0 <= index < total:
        raise ValidationError(f"subspace index {index} out of range; there are {total}")
    K = point.residue
    for pivots in combinations(range(n), r):
        slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        block = K.size ** len(slots)
        if index >= block:
            index -= block
            continue
        rows = [[K.zero] * n for _ in range(r)]
        for i, p in enumerate(pivots):
            rows[i][p] = K.one
        for (i, c) in reversed(slots):
            rows[i][c] = K.element(index % K.size)
            index //= K.size
        return FiberSubspace(point, n, rows)
    raise AssertionError("unreachable")  # pragma: no cover
