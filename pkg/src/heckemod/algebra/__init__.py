"""Exact arithmetic: finite fields, polynomials, Q(zeta_n), rational functions in v."""

from fractions import Fraction

from ..errors import ValidationError
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .finite_field import FFElement, FiniteField, ff_create, field_of_order, prime_power
from .linalg import EchelonBasis, Matrix, kernel_dimension
from .poly import Poly, lagrange_interpolate
from .ratfunc import HalfPowerValue, RationalFunction, quantum_integer


def gaussian_binomial(n: int, r: int, q=None):
    """Number of r-dimensional subspaces of F_q^n.

    With q=None the result is the polynomial in q (a :class:`Poly` with
    integer coefficients); with a concrete q it is an int.
    """
    if not (isinstance(n, int) and isinstance(r, int)):
        raise ValidationError("gaussian_binomial needs integer n and r")
    if r < 0 or r > n:
        raise ValidationError(f"need 0 <= r <= n, got n={n}, r={r}")
    if q is not None:
        num = den = 1
        for i in range(r):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        return num // den
    num = den = Poly((Fraction(1),))
    for i in range(r):
        num = num * (Poly.monomial(n - i, Fraction(1)) - 1)
        den = den * (Poly.monomial(i + 1, Fraction(1)) - 1)
    quot, rem = num.divmod(den)
    assert rem.is_zero()
    return quot


__all__ = [
    "Cyclotomic",
    "EchelonBasis",
    "FFElement",
    "FiniteField",
    "HalfPowerValue",
    "Matrix",
    "Poly",
    "RationalFunction",
    "cyclotomic_polynomial",
    "ff_create",
    "field_of_order",
    "gaussian_binomial",
    "kernel_dimension",
    "lagrange_interpolate",
    "prime_power",
    "quantum_integer",
]
