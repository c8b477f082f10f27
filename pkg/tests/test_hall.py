from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemod.algebra import Poly, RationalFunction, gaussian_binomial
from heckemod.errors import ValidationError
from heckemod.hall import (
    CohClassP1,
    GenericPoint,
    euler_form,
    hall_product_counts,
    hall_product_skyscraper,
    multiplicity_polynomials,
    verify_sum_rule,
)
from heckemod.hall.polynomials import default_samples, degree_bound
from heckemod.p1 import SplittingType, first_point, multiplicity_table

q = Poly.monomial(1, 1)
one = Poly.const(1)


def test_euler_form_p1():
    E = CohClassP1(SplittingType((-1, 0)))
    K = CohClassP1.skyscraper(GenericPoint(3), 2)
    assert K.rank == 0 and K.degree == 6
    assert euler_form(K, E) == -12
    assert euler_form(E, E) == 4
    assert euler_form(E, K) == 12


def test_euler_form_needs_same_curve():
    class Other:
        genus, rank, degree = 1, 1, 0

    with pytest.raises(ValidationError):
        euler_form(CohClassP1(SplittingType((0,))), Other())


def test_degree1_polynomials():
    t = multiplicity_polynomials((0, 3), 1, 1)
    assert t.polynomials == {SplittingType((-1, 3)): one, SplittingType((0, 2)): q}
    assert degree_bound(2, 1, 1) == 1
    assert t.independence_checked_at == 2


def test_sum_rule_and_negative_control():
    t = multiplicity_polynomials((0, 0), 2, 1)
    rep = verify_sum_rule(t)
    assert rep.ok and rep.rhs == gaussian_binomial(2, 1).substitute_power(2)
    bad = verify_sum_rule(t.perturbed((-2, 0), 1))
    assert not bad.ok
    assert bad.delta == one


def test_rank3_polynomials():
    t = multiplicity_polynomials((0, 0, 1), 1, 2)
    assert t.total() == q**2 + q + one
    assert verify_sum_rule(t)


@settings(max_examples=15, deadline=None)
@given(st.integers(-3, 3), st.integers(0, 3), st.integers(-3, 3))
def test_twist_shift(a, n, k):
    E = SplittingType((a, a + n))
    t = multiplicity_polynomials(E, 1, 1)
    assert multiplicity_polynomials(E.twist(k), 1, 1).polynomials == t.shifted(k).polynomials


def test_interpolated_values_match_tables():
    t = multiplicity_polynomials((-1, 1), 2, 1)
    for qq in (2, 3, 4, 5):
        table = multiplicity_table((-1, 1), first_point(qq, 2), 1)
        assert {k: v for k, v in t.evaluate(qq).items() if v} == {k: Fraction(v) for k, v in table.items()}


def test_too_few_samples():
    with pytest.raises(ValidationError):
        multiplicity_polynomials((0, 0), 2, 1, samples=[2, 3])
    with pytest.raises(ValidationError):
        multiplicity_polynomials((0, 0), 1, 1, samples=[2, 2, 3])
    assert default_samples(2, 5, 1) == [2, 3, 4, 5, 7, 8, 9]


def test_hall_product_degree1():
    h = hall_product_skyscraper(1, 1, (-1, 0))
    v = RationalFunction.v
    assert h.coefficient(CohClassP1(SplittingType((0, 0)))) == 1 + v(2)
    assert h.coefficient(CohClassP1(SplittingType((-1, 1)))) == RationalFunction.const(1)
    rec = h.to_record()
    assert any("not computed" in str(row) for row in rec)


def test_hall_product_transport():
    """Coefficients are the oracle counts times the v-prefactor v^(n r d)."""
    for E in [(-1, 0), (0, 2), (-2, 1)]:
        h = hall_product_skyscraper(1, 1, E)
        counts = hall_product_counts(first_point(3, 1), 1, E)
        pref = RationalFunction.v(2)
        for big, m in counts.items():
            c = h.coefficient(CohClassP1(big)) * pref.inverse()
            assert c.evaluate(3).value == m


def test_cohclass_render():
    K = CohClassP1.skyscraper(GenericPoint(1), 1)
    E = CohClassP1(SplittingType((-1, 0))).plus_torsion(GenericPoint(1), (1,))
    assert "(-1,0)" in E.render()
    assert not K.is_bundle()
    assert CohClassP1(SplittingType((-1, 0))).is_bundle()
