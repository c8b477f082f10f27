"""Closed points of the affine line over F_q and their residue fields.

A closed point x is a monic irreducible pi_x in F_q[t]; its residue field
F(x) = F_q[t]/(pi_x) has q^d elements.  An element of F(x) is the tuple of
its d coefficient codes (constant first), i.e. a polynomial of degree < d.
The point at infinity is not represented.
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra import fqpoly
from ..algebra.finite_field import FiniteField, field_of_order
from ..errors import ValidationError


class ResidueField:
    """F_q[t]/(pi) for an irreducible pi, acting on coefficient tuples."""

    def __init__(self, field: FiniteField, modulus):
        self.base = field
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.size = field.q**self.degree
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)
        # -pi_k, the reduction rule t^d = -sum pi_k t^k
        self._neg_pi = [field.neg(c) for c in self.modulus[:-1]]

    def _pad(self, f):
        f = list(f)
        return tuple(f + [0] * (self.degree - len(f)))

    def reduce(self, f):
        """Image of a polynomial (code list) in F(x)."""
        return self._pad(fqpoly.mod(self.base, fqpoly.trim(f), list(self.modulus)))

    def element(self, index: int):
        """The element with base-q digits ``index`` (constant coefficient first)."""
        if not 0 <= index < self.size:
            raise ValidationError(f"index {index} out of range for a field of size {self.size}")
        q, out = self.base.q, []
        for _ in range(self.degree):
            out.append(index % q)
            index //= q
        return tuple(out)

    def index(self, a) -> int:
        q, n = self.base.q, 0
        for c in reversed(a):
            n = n * q + c
        return n

    def elements(self):
        for i in range(self.size):
            yield self.element(i)

    def from_base(self, c):
        return (c,) + (0,) * (self.degree - 1)

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        F = self.base
        return self.reduce(fqpoly.mul(F, fqpoly.trim(a), fqpoly.trim(b)))

    def mul_t(self, a):
        """Multiply by the class of t."""
        F = self.base
        top = a[-1]
        out = [0] + list(a[:-1])
        if top:
            for k, c in enumerate(self._neg_pi):
                if c:
                    out[k] = F.add(out[k], F.mul(top, c))
        return tuple(out)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in a residue field")
        f = fqpoly.powmod(self.base, fqpoly.trim(a), self.size - 2, list(self.modulus))
        return self._pad(f)

    def is_zero(self, a):
        return not any(a)

    def render(self, a, var="t"):
        return fqpoly.render(self.base, fqpoly.trim(a), var)


class ClosedPointP1:
    """A finite closed point of P^1 over F_q, given by its monic irreducible."""

    def __init__(self, field: FiniteField, poly, check: bool = True):
        poly = tuple(fqpoly.trim(poly))
        if len(poly) < 2 or poly[-1] != 1:
            raise ValidationError("a closed point needs a monic polynomial of degree >= 1")
        if check and not fqpoly.is_irreducible(field, list(poly)):
            raise ValidationError(f"{fqpoly.render(field, list(poly))} is reducible over F_{field.q}")
        self.field = field
        self.poly = poly
        self.degree = len(poly) - 1
        self.residue = ResidueField(field, poly)

    @property
    def q(self):
        return self.field.q

    @property
    def residue_size(self):
        return self.residue.size

    def render(self, var="t"):
        return fqpoly.render(self.field, list(self.poly), var)

    def __eq__(self, other):
        return isinstance(other, ClosedPointP1) and (self.field, self.poly) == (other.field, other.poly)

    def __hash__(self):
        return hash((self.field.q, self.poly))

    def __lt__(self, other):
        return (self.degree, self.poly) < (other.degree, other.poly)

    def __repr__(self):
        return f"ClosedPointP1({self.render()} over F_{self.q})"


def iter_closed_points(q: int, d: int):
    """Monic irreducibles of degree d over F_q, in lexicographic order."""
    if not isinstance(d, int) or d < 1:
        raise ValidationError(f"point degree must be >= 1, got {d!r}")
    F = field_of_order(q)
    for f in fqpoly.iter_monic_irreducibles(F, d):
        yield ClosedPointP1(F, f, check=False)


@lru_cache(maxsize=None)
def _closed_points(q, d):
    return tuple(iter_closed_points(q, d))


def closed_points(q: int, d: int):
    return list(_closed_points(q, d))


@lru_cache(maxsize=None)
def point_by_index(q: int, d: int, index: int = 0) -> ClosedPointP1:
    """The index-th closed point of degree d in lexicographic order."""
    if index < 0:
        raise ValidationError("point index must be >= 0")
    for i, x in enumerate(iter_closed_points(q, d)):
        if i == index:
            return x
    raise ValidationError(f"there are fewer than {index + 1} points of degree {d} over F_{q}")


def first_point(q: int, d: int) -> ClosedPointP1:
    return point_by_index(q, d, 0)


def point_from_string(q: int, text: str, var: str = "t") -> ClosedPointP1:
    F = field_of_order(q)
    return ClosedPointP1(F, fqpoly.parse(F, text, var))


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_q."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(d // e) * q**e
    return total // d


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result
