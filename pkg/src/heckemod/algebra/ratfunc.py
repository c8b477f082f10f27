"""Rational functions in a formal variable v over Q(zeta_n).

The Hall-algebra conventions fix v with v^2 = q^-1, so q itself is the
element v^-2 and a concrete prime power q gives v = q^(-1/2).

A :class:`RationalFunction` is stored as v^shift * num(v) / den(v) where
num and den are polynomials with nonzero constant terms, coprime, and
den(0) = 1.  This normal form is unique, so equality is syntactic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ValidationError
from .cyclotomic import Cyclotomic
from .poly import Poly, render_terms


def _canon(c):
    # rational cyclotomic constants are stored as Fractions
    if isinstance(c, Cyclotomic):
        return c.to_fraction() if c.is_rational() else c
    return Fraction(c)


def _canon_poly(p: Poly) -> Poly:
    return Poly([_canon(c) for c in p.coeffs])


def _strip_low(p: Poly):
    k = p.low_order()
    return (p.shift(-k), k) if k else (p, 0)


class RationalFunction:
    __slots__ = ("shift", "num", "den")

    def __init__(self, num, den=None, shift: int = 0):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(Fraction(1)) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den, shift = Poly(), Poly.const(Fraction(1)), 0
        else:
            num, a = _strip_low(num)
            den, b = _strip_low(den)
            shift += a - b
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            c0 = den[0]
            inv = 1 / c0 if not isinstance(c0, int) else Fraction(1, c0)
            num, den = num * inv, den * inv
            num, den = _canon_poly(num), _canon_poly(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls(Poly.const(c))

    @classmethod
    def v(cls, power: int = 1):
        return cls(Poly.const(Fraction(1)), shift=power)

    @classmethod
    def q(cls, power: int = 1):
        """q**power = v**(-2*power)."""
        return cls.v(-2 * power)

    @classmethod
    def from_q_poly(cls, p: Poly):
        """Lift a polynomial in q (rational coefficients) to v."""
        acc = cls.const(0)
        for e, c in enumerate(p.coeffs):
            if c != 0:
                acc = acc + cls.q(e) * c
        return acc

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_laurent(self):
        return self.den.degree == 0

    def exponents(self):
        """v-exponents of the numerator terms (after the shift)."""
        return [i + self.shift for i, c in enumerate(self.num.coeffs) if c != 0]

    def is_even(self):
        """True when only even powers of v occur, i.e. an honest function of q."""
        if self.shift % 2:
            return False
        return all(i % 2 == 0 for i, c in enumerate(self.num.coeffs) if c != 0) and all(
            i % 2 == 0 for i, c in enumerate(self.den.coeffs) if c != 0
        )

    def is_zeta_free(self):
        return all(not isinstance(c, Cyclotomic) for c in self.num.coeffs + self.den.coeffs)

    def coefficients(self):
        return self.num.coeffs + self.den.coeffs

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return RationalFunction.const(other)
        return NotImplemented

    def _parts(self):
        # (num, den) with the shift folded in as a power of v on one side
        if self.shift >= 0:
            return self.num.shift(self.shift), self.den
        return self.num, self.den.shift(-self.shift)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        s = min(self.shift, other.shift)
        a = self.num.shift(self.shift - s)
        b = other.num.shift(other.shift - s)
        if self.den == other.den:
            return RationalFunction(a + b, self.den, s)
        return RationalFunction(a * other.den + b * self.den, self.den * other.den, s)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.shift)

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
        return RationalFunction(self.num * other.num, self.den * other.den, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, -self.shift)

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
        return RationalFunction(self.num**e, self.den**e, self.shift * e)

    def map_coeffs(self, fn):
        return RationalFunction(self.num.map_coeffs(fn), self.den.map_coeffs(fn), self.shift)

    def galois(self, j):
        """Apply zeta -> zeta^j to every coefficient."""
        def g(c):
            return c.galois(j) if isinstance(c, Cyclotomic) else c

        return self.map_coeffs(g)

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self.shift, self.num, self.den) == (other.shift, other.num, other.den)

    def __hash__(self):
        return hash((self.shift, self.num, self.den))

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, q) -> "HalfPowerValue":
        """Substitute v = q^(-1/2) for a concrete positive q.

        Returns a + b*v with a, b exact; b is zero exactly when the result
        is a rational (or cyclotomic) number.
        """
        q = Fraction(q)
        if q <= 0:
            raise ValidationError("q must be positive")
        inv_q = 1 / q

        def split(p, shift):
            a, b = Fraction(0), Fraction(0)
            for i, c in enumerate(p.coeffs):
                e = i + shift
                if c == 0:
                    continue
                if e % 2 == 0:
                    a = a + c * inv_q ** (e // 2)
                else:
                    b = b + c * inv_q ** ((e - 1) // 2)
            return a, b

        na, nb = split(self.num, self.shift)
        da, db = split(self.den, 0)
        # (na + nb v)(da - db v) / (da^2 - db^2 v^2), v^2 = 1/q
        norm = da * da - db * db * inv_q
        if norm == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {q}")
        a = (na * da - nb * db * inv_q) / norm
        b = (nb * da - na * db) / norm
        return HalfPowerValue(_canon(a), _canon(b), q)

    # -- rendering -------------------------------------------------------------

    def render(self):
        """Canonical text: in q when only even v-powers occur, else in v."""
        if self.is_even():
            # q = v^-2; reverse both polynomials so they are polynomials in q
            dn, dd = self.num.degree // 2, self.den.degree // 2
            e = -self.shift // 2 - dn + dd
            num_terms = [(dn - i // 2, c) for i, c in enumerate(self.num.coeffs)]
            den_terms = [(dd - i // 2, c) for i, c in enumerate(self.den.coeffs)]
            if self.is_laurent() or e >= 0:
                num_terms = [(k + e, c) for k, c in num_terms]
            else:
                den_terms = [(k - e, c) for k, c in den_terms]
            var = "q"
        else:
            num_terms = [(i + self.shift, c) for i, c in enumerate(self.num.coeffs)]
            den_terms = list(enumerate(self.den.coeffs))
            var = "v"
        num_txt = render_terms(num_terms, var)
        if self.is_laurent():
            return num_txt
        den_txt = render_terms(den_terms, var)
        return f"({num_txt})/({den_txt})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RationalFunction({self.render()})"


class HalfPowerValue:
    """The number a + b*q^(-1/2) at a concrete q."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q):
        self.a, self.b, self.q = a, b, q

    def is_exact(self):
        return self.b == 0

    @property
    def value(self):
        if not self.is_exact():
            raise ValidationError(
                f"value {self.render()} carries a half-integer power of q and is not rational"
            )
        return self.a

    def render(self):
        if self.is_exact():
            return str(self.a)
        sign, b = ("-", -self.b) if self.b < 0 else ("+", self.b)
        if self.a == 0:
            return f"{self.b}*q^(-1/2)"
        return f"{self.a} {sign} {b}*q^(-1/2)"

    def __eq__(self, other):
        if isinstance(other, HalfPowerValue):
            return (self.a, self.b, self.q) == (other.a, other.b, other.q)
        return self.is_exact() and self.a == other

    def __hash__(self):
        return hash((self.a, self.b, self.q))

    def __repr__(self):
        return f"HalfPowerValue({self.render()} at q={self.q})"


def quantum_integer(m: int) -> RationalFunction:
    """[m] = (v^m - v^-m) / (v - v^-1)."""
    v = RationalFunction.v
    return (v(m) - v(-m)) / (v(1) - v(-1))


Q = RationalFunction.q()
V = RationalFunction.v()
ONE = RationalFunction.const(1)
ZERO = RationalFunction.const(0)
