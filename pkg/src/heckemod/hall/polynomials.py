"""Multiplicity polynomials in q and Hall products with skyscraper sheaves.

The counts m_{x,r}(E, E') depend only on q and deg x, and are polynomials
in q.  We compute them at several fields with the brute-force oracle and
interpolate; extra samples beyond the degree bound are held out as a check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, islice

from ..algebra import Poly, gaussian_binomial, lagrange_interpolate
from ..algebra.finite_field import prime_powers
from ..algebra.ratfunc import RationalFunction
from ..errors import InvariantError, ValidationError
from ..p1.oracle import DEFAULT_CAP, multiplicity_table
from ..p1.points import necklace_count, point_by_index
from ..p1.splitting import SplittingType
from .classes import CohClassP1, GenericPoint, euler_form
from .element import HallElementP1


@lru_cache(maxsize=4096)
def _table_counts(entries, q, d, index, r, cap=DEFAULT_CAP):
    x = point_by_index(q, d, index)
    return dict(multiplicity_table(SplittingType(entries), x, r, cap=cap).counts)


def degree_bound(n: int, d: int, r: int) -> int:
    """Multiplicities are polynomials in q of degree at most r(n-r)d."""
    return r * (n - r) * d


def default_samples(n: int, d: int, r: int, extra: int = 1):
    return list(islice(prime_powers(2), degree_bound(n, d, r) + 1 + extra))


class MultiplicityPolynomialTable:
    def __init__(self, source, d, r, polynomials, samples, independence_checked_at=None):
        self.source = source
        self.d = d
        self.r = r
        self.polynomials = dict(sorted(polynomials.items()))
        self.samples = list(samples)
        self.independence_checked_at = independence_checked_at

    def __getitem__(self, key):
        key = key if isinstance(key, SplittingType) else SplittingType(key)
        return self.polynomials.get(key, Poly())

    def items(self):
        return self.polynomials.items()

    def total(self) -> Poly:
        acc = Poly()
        for p in self.polynomials.values():
            acc = acc + p
        return acc

    def evaluate(self, q):
        return {k: p(Fraction(q)) for k, p in self.polynomials.items()}

    def perturbed(self, key, delta=1):
        """A copy with one polynomial shifted by a constant (for negative controls)."""
        polys = dict(self.polynomials)
        key = key if isinstance(key, SplittingType) else SplittingType(key)
        polys[key] = polys.get(key, Poly()) + delta
        return MultiplicityPolynomialTable(self.source, self.d, self.r, polys, self.samples)

    def shifted(self, k):
        return MultiplicityPolynomialTable(
            self.source.twist(k), self.d, self.r,
            {t.twist(k): p for t, p in self.polynomials.items()}, self.samples,
        )

    def to_record(self):
        return {
            "source": self.source.to_list(),
            "point_degree": self.d,
            "weight": self.r,
            "table": [{"type": k.to_list(), "polynomial": p.render("q")} for k, p in self.polynomials.items()],
            "total": self.total().render("q"),
            "samples": self.samples,
            "independence_checked_at": self.independence_checked_at,
        }

    def __repr__(self):
        body = ", ".join(f"{k}: {p.render('q')}" for k, p in self.polynomials.items())
        return f"MultiplicityPolynomialTable({self.source}, d={self.d}, r={self.r}: {body})"


def multiplicity_polynomials(E, d: int, r: int, samples=None, cap: int = DEFAULT_CAP) -> MultiplicityPolynomialTable:
    """Interpolate m_{x,r}(E, -) as polynomials in q from oracle tables at the sample fields."""
    E = E if isinstance(E, SplittingType) else SplittingType(E)
    if not isinstance(d, int) or d < 1:
        raise ValidationError("point degree must be >= 1")
    if not isinstance(r, int) or not 1 <= r <= E.rank:
        raise ValidationError(f"weight must satisfy 1 <= r <= {E.rank}")
    bound = degree_bound(E.rank, d, r)
    samples = default_samples(E.rank, d, r) if samples is None else list(samples)
    if len(set(samples)) != len(samples):
        raise ValidationError("duplicate sample fields")
    if len(samples) < bound + 1:
        raise ValidationError(
            f"need at least {bound + 1} sample fields for degree bound {bound}, got {len(samples)}"
        )
    data = {q: _table_counts(E.entries, q, d, 0, r, cap) for q in samples}
    keys = sorted({k for counts in data.values() for k in counts})
    polys = {}
    for k in keys:
        polys[k] = lagrange_interpolate([(q, data[q].get(k, 0)) for q in samples], bound)
    # the counts must not depend on which degree-d point was used
    checked = None
    for q in samples:
        if necklace_count(q, d) >= 2:
            other = _table_counts(E.entries, q, d, 1, r, cap)
            if other != data[q]:
                raise InvariantError(f"tables at two degree-{d} points over F_{q} differ")
            checked = q
            break
    polys = {k: p for k, p in polys.items() if not p.is_zero()}
    return MultiplicityPolynomialTable(E, d, r, polys, samples, checked)


class SumRuleReport:
    def __init__(self, ok, lhs, rhs):
        self.ok = ok
        self.lhs = lhs
        self.rhs = rhs
        self.delta = lhs - rhs

    def __bool__(self):
        return self.ok

    def to_record(self):
        return {
            "ok": self.ok,
            "sum": self.lhs.render("q"),
            "expected": self.rhs.render("q"),
            "delta": self.delta.render("q"),
        }


def verify_sum_rule(table: MultiplicityPolynomialTable) -> SumRuleReport:
    """Compare the sum of the multiplicity polynomials with #Gr over F(x)."""
    rhs = gaussian_binomial(table.source.rank, table.r).substitute_power(table.d)
    lhs = table.total()
    return SumRuleReport(lhs == rhs, lhs, rhs)


def _candidates(E, d, r):
    """Types E'' of rank n and degree deg E + r d with entries in [min E, max E + d]."""
    n, deg = E.rank, E.degree + r * d
    lo, hi = min(E.entries), max(E.entries) + d
    for combo in combinations_with_replacement(range(lo, hi + 1), n):
        if sum(combo) == deg:
            yield SplittingType(combo)


def hall_product_skyscraper(d: int, r: int, E, samples=None) -> HallElementP1:
    """K_x^(+r) * E with x of degree d, as an element with coefficients in Q(v).

    The bundle terms are E'' with coefficient m_{x,r}(E'', E), the number of
    subsheaves of E'' isomorphic to E with quotient K_x^(+r); the split term
    E + K_x^(+r) is carried as a marker with its coefficient left symbolic.
    """
    E = E if isinstance(E, SplittingType) else SplittingType(E)
    K = CohClassP1.skyscraper(GenericPoint(d), r)
    target = CohClassP1(E)
    prefactor = RationalFunction.v(-euler_form(K, target))
    terms = {}
    for big in _candidates(E, d, r):
        table = multiplicity_polynomials(big, d, r, samples)
        p = table[E]
        if not p.is_zero():
            terms[CohClassP1(big)] = RationalFunction.from_q_poly(p) * prefactor
    markers = {target.plus_torsion(GenericPoint(d), (1,) * r): "t"}
    return HallElementP1(terms, markers)


def hall_product_counts(x, r: int, E) -> dict:
    """Concrete bundle coefficients of K_x^(+r) * E at the field of x (no v-prefactor)."""
    E = E if isinstance(E, SplittingType) else SplittingType(E)
    out = {}
    for big in _candidates(E, x.degree, r):
        m = multiplicity_table(big, x, r)[E]
        if m:
            out[big] = m
    return out
