"""The cyclotomic fields Q(zeta_n).

An element is a rational polynomial in zeta of degree < phi(n), reduced
modulo the n-th cyclotomic polynomial after every operation.  Order 1 is
plain Q.  Rational elements combine with elements of any order; two
non-rational elements of different orders do not mix.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import ValidationError
from .poly import Poly


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Phi_n over Q, by dividing x^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValidationError("cyclotomic order must be >= 1")
    f = Poly([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    for d in range(1, n):
        if n % d == 0:
            f = f // cyclotomic_polynomial(d)
    return f


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class Cyclotomic:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=()):
        phi = cyclotomic_polynomial(n)
        p = Poly([Fraction(c) for c in coeffs])
        if p.degree >= phi.degree:
            p = p % phi
        cs = p.coeffs
        object.__setattr__(self, "n", n if any(cs[1:]) else 1)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def zeta(cls, n: int, power: int = 1):
        power %= n
        return cls(n, [0] * power + [1])

    @classmethod
    def rational(cls, c):
        return cls(1, [c])

    # -- structure --------------------------------------------------------

    def is_rational(self):
        return len(self.coeffs) <= 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _poly(self):
        return Poly(self.coeffs)

    @staticmethod
    def _order(a, b):
        if a.n == 1:
            return b.n
        if b.n == 1 or a.n == b.n:
            return a.n
        raise ValidationError(f"cannot mix Q(zeta_{a.n}) and Q(zeta_{b.n})")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self._order(self, other)
        return Cyclotomic(n, (self._poly() + other._poly()).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self._order(self, other)
        return Cyclotomic(n, (self._poly() * other._poly()).coeffs)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0])
        # extended Euclid of self against Phi_n over Q
        phi = cyclotomic_polynomial(self.n)
        r0, r1 = phi, self._poly()
        s0, s1 = Poly(), Poly((Fraction(1),))
        while r1.degree > 0:
            quo, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quo * s1
        if r1.is_zero():
            raise ZeroDivisionError("element is a zero divisor")  # pragma: no cover
        return Cyclotomic(self.n, (s1 * (1 / r1.coeffs[0])).coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Cyclotomic.rational(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, j: int):
        """The automorphism zeta -> zeta^j, gcd(j, n) = 1."""
        if self.is_rational():
            return self
        if _gcd(j % self.n, self.n) != 1:
            raise ValidationError(f"zeta -> zeta^{j} is not an automorphism of Q(zeta_{self.n})")
        acc = Cyclotomic.rational(0)
        for i, c in enumerate(self.coeffs):
            acc = acc + Cyclotomic.zeta(self.n, i * j) * c
        return acc

    def conjugate(self):
        return self.galois(-1)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs and (self.n == other.n or self.is_rational())

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.n, self.coeffs))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not (self.is_rational() and other.is_rational()):
            raise TypeError("only rational cyclotomic elements are ordered")
        return self.to_fraction() < other.to_fraction()

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering --------------------------------------------------------

    def render(self, var="z"):
        if self.is_rational():
            return str(self.to_fraction())
        from .poly import render_terms

        txt = render_terms(list(enumerate(self.coeffs)), var)
        return txt

    def to_record(self, order=None):
        """Coefficient vector over the power basis 1, zeta, ..., as strings."""
        n = order or self.n
        phi = cyclotomic_polynomial(n).degree
        cs = list(self.coeffs) + [Fraction(0)] * (phi - len(self.coeffs))
        return {"order": n, "coefficients": [str(c) for c in cs]}

    def __repr__(self):
        return f"Cyclotomic({self.n}: {self.render()})"
