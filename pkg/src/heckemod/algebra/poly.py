"""Dense univariate polynomials over an exact field of Python objects.

Coefficients may be ints, Fractions or Cyclotomic elements; anything that
supports +, -, *, / and comparison with 0.  Instances are immutable.
"""

from __future__ import annotations

from fractions import Fraction


def _is_zero(c):
    return c == 0


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    # -- basic queries --------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def low_order(self):
        """Index of the lowest nonzero coefficient (None for zero)."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _wrap(other):
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if _is_zero(other):
                return Poly()
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        return self * c

    def shift(self, k):
        """Multiply by x**k (k >= 0) or divide by x**(-k) when exact."""
        if k >= 0:
            return Poly((0,) * k + self.coeffs) if self.coeffs else Poly()
        if any(not _is_zero(c) for c in self.coeffs[:-k]):
            raise ValueError("shift would drop nonzero coefficients")
        return Poly(self.coeffs[-k:])

    def divmod(self, other):
        other = self._wrap(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        if len(rem) <= dg:
            return Poly(), self
        inv_lc = 1 / other.lc() if not isinstance(other.lc(), int) else Fraction(1, other.lc())
        quot = [0] * (len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if _is_zero(c):
                continue
            c = c * inv_lc
            quot[i - dg] = c
            for j, g in enumerate(other.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - c * g
        return Poly(quot), Poly(rem[:dg])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc()
        inv = 1 / lc if not isinstance(lc, int) else Fraction(1, lc)
        return self * inv

    def gcd(self, other):
        a, b = self, self._wrap(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, d):
        """p(x) -> p(x**d)."""
        out = [0] * (d * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Poly(out)

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    # -- rendering --------------------------------------------------------

    def render(self, var="q"):
        """Terms in decreasing degree with explicit signs, e.g. 'q^5 - q^3'."""
        return render_terms([(i, c) for i, c in enumerate(self.coeffs)], var)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render('x')})"


def _is_negative(c):
    try:
        return c < 0
    except TypeError:
        return False


def render_coeff(c):
    if hasattr(c, "render"):
        return c.render()
    return str(c)


def render_terms(terms, var="q"):
    """Render (exponent, coefficient) pairs, highest exponent first."""
    terms = sorted(((e, c) for e, c in terms if not _is_zero(c)), key=lambda t: -t[0])
    if not terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(terms):
        neg = _is_negative(c)
        mag = -c if neg else c
        if e == 0:
            mon = ""
        elif e == 1:
            mon = var
        else:
            mon = f"{var}^{e}"
        if not mon:
            body = render_coeff(mag)
        elif mag == 1:
            body = mon
        else:
            txt = render_coeff(mag)
            if not isinstance(mag, (int, Fraction)) and " " in txt:
                txt = f"({txt})"
            body = f"{txt}*{mon}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def lagrange_interpolate(samples, degree_bound=None):
    """Interpolate exact samples [(x, y), ...] by a polynomial over Q.

    The first ``degree_bound + 1`` samples determine the polynomial; the
    remaining ones are held out and must agree exactly.  Without a bound
    every sample is used for the fit.
    """
    from ..errors import InterpolationError, ValidationError

    samples = [(Fraction(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValidationError("duplicate sample abscissae")
    if not samples:
        raise ValidationError("no samples")
    if degree_bound is None:
        degree_bound = len(samples) - 1
    if degree_bound < 0:
        raise ValidationError("degree bound must be nonnegative")
    if len(samples) < degree_bound + 1:
        raise ValidationError(
            f"need at least {degree_bound + 1} samples for degree bound {degree_bound}, "
            f"got {len(samples)}"
        )
    fit, held = samples[: degree_bound + 1], samples[degree_bound + 1 :]
    result = Poly()
    for i, (xi, yi) in enumerate(fit):
        basis = Poly((1,))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(fit):
            if j != i:
                basis = basis * Poly((-xj, 1))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    for x, y in held:
        if result(x) != y:
            raise InterpolationError(
                f"held-out sample at {x} disagrees: polynomial gives {result(x)}, sample {y}"
            )
    return result
