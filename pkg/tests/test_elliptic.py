from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemod.algebra import Cyclotomic, RationalFunction, quantum_integer
from heckemod.elliptic import (
    CURVE,
    AtiyahLabel,
    LinComb,
    PicardGroup,
    assemble_bracket,
    base_change,
    character_table,
    closed_point,
    closed_points_elliptic,
    count_points,
    multiplicity_extraction,
    orthogonality_matrix,
)
from heckemod.elliptic.bracket import (
    E11_PAIR,
    E22_X,
    E22_X0,
    E22_Y,
    EXPECTED_SUPPORT,
    SheafClass,
    TPoint,
    evaluate_multiplicities,
    printed_final,
)
from heckemod.elliptic.characters import isolation_weights
from heckemod.elliptic.curve import WeierstrassChar2, render_point
from heckemod.errors import InvariantError, ValidationError
from heckemod.hall import euler_form

z = Cyclotomic.zeta(5)
A = z + z**4
B = z**2 + z**3
v = RationalFunction.v
qf = RationalFunction.q


# -- points and group law ------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_point_counts_three_ways(n):
    N, pts = count_points(n)
    assert N == len(pts) == CURVE.count_by_trace(n) == CURVE.count_by_frobenius(n)


def test_small_counts():
    assert [count_points(n)[0] for n in range(1, 7)] == [1, 5, 13, 25, 41, 65]
    _, pts = count_points(2)
    assert [render_point(P) for P in pts] == ["infinity", "(0, 2)", "(0, 3)", "(1, 2)", "(1, 3)"]


def test_group_law_exhaustive_f4():
    F = CURVE.field(2)
    pts = count_points(2)[1]
    for P in pts:
        assert CURVE.add(P, CURVE.neg(P, F), F) is None
        assert CURVE.mul(5, P, F) is None
        for Q in pts:
            assert CURVE.add(P, Q, F) == CURVE.add(Q, P, F)
            for R in pts:
                assert CURVE.add(CURVE.add(P, Q, F), R, F) == CURVE.add(P, CURVE.add(Q, R, F), F)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_group_law_f16(i, j, k):
    F = CURVE.field(4)
    pts = count_points(4)[1]
    P, Q, R = (pts[i % len(pts)], pts[j % len(pts)], pts[k % len(pts)])
    assert CURVE.contains(CURVE.add(P, Q, F), F)
    assert CURVE.add(CURVE.add(P, Q, F), R, F) == CURVE.add(P, CURVE.add(Q, R, F), F)
    # Frobenius is a group homomorphism
    assert CURVE.frobenius(CURVE.add(P, Q, F)) == CURVE.add(CURVE.frobenius(P), CURVE.frobenius(Q), F)


def test_multiples_of_x1():
    G = PicardGroup(2)
    F = G.field
    seq = [render_point(CURVE.mul(k, G.generator, F)) for k in range(6)]
    assert seq == ["infinity", "(0, 2)", "(1, 2)", "(1, 3)", "(0, 3)", "infinity"]


def test_closed_points():
    pts = closed_points_elliptic(2)
    assert [(z.name, z.degree) for z in pts] == [("x0", 1), ("x", 2), ("y", 2)]
    assert closed_point("x").degree == 2
    with pytest.raises(ValidationError):
        closed_point("w")
    with pytest.raises(ValidationError):
        closed_points_elliptic(0)
    # sum over e | n of e * #(closed points of degree e) = N_n
    pts4 = closed_points_elliptic(4)
    for n in (1, 2, 4):
        assert sum(p.degree for p in pts4 if n % p.degree == 0) == count_points(n)[0]


def test_curve_validation():
    with pytest.raises(ValidationError):
        WeierstrassChar2(a3=0)
    with pytest.raises(ValidationError):
        CURVE.field(13)


# -- characters ---------------------------------------------------------------------------


def test_character_table_values():
    table = character_table(2)
    assert [c.orbit for c in table] == [(0,), (1, 4), (2, 3), (2, 3), (1, 4)]
    rho1 = table[1]
    assert rho1("x0") == 1
    assert rho1("x") == A / 2
    assert rho1("y") == B / 2


def test_orthogonality():
    G = orthogonality_matrix(2)
    for i, j in product(range(5), repeat=2):
        assert G[i][j] == (5 if i == j else 0)


def test_group_table_is_cyclic():
    G = PicardGroup(2)
    T = G.group_table()
    logs = [G.discrete_log(P) for P in G.points]
    for i, j in product(range(5), repeat=2):
        assert T[i][j] == (logs[i] + logs[j]) % 5


@pytest.mark.parametrize("vec", [(0, 2), (2, 0), (2, 2)])
def test_base_change_round_trip(vec):
    bc = base_change(vec)
    assert bc.is_identity()
    assert bc.to_characters[0] == [1, 1, 1]
    assert bc.to_characters[1] == [1, A / 2, B / 2]


def test_t_x_in_characters():
    bc = base_change((0, 2))
    assert bc.point_in_characters("x") == [Cyclotomic.rational(2) / 5,
                                          2 * A / 5, 2 * B / 5]


def test_isolation_constant():
    iso = isolation_weights("y")
    assert iso == {"x0": 0, "x": 0, "y": Cyclotomic.rational(5) / 2}
    assert isolation_weights("x")["x"] == Cyclotomic.rational(5) / 2


# -- bracket ---------------------------------------------------------------------------------


def test_atiyah_label_validation():
    AtiyahLabel(2, 2, "x", 2, 1)
    with pytest.raises(InvariantError):
        AtiyahLabel(2, 2, "x", 2, 2)


def test_euler_form_factor():
    assert euler_form(SheafClass(0, 2), SheafClass(2, 0)) == -4


def test_lincomb_linearity():
    a = LinComb.of(TPoint((2, 2), "x"), v(1))
    b = LinComb.of(TPoint((2, 2), "y"), 3)
    assert (a + b).scale(2).coefficient(TPoint((2, 2), "y")) == RationalFunction.const(6)
    assert (a + a.scale(-1)).terms == {}


def test_bracket_is_zeta_free_and_fully_resolved():
    res = assemble_bracket()
    assert res.is_zeta_free()
    assert all(isinstance(s, type(E11_PAIR)) for s in res.result.terms)
    names = [s.name for s in res.steps]
    assert names == ["generators", "base_change", "to_characters", "commute", "constants",
                     "relations", "to_points", "atiyah"]


def test_bracket_computed_coefficients():
    res = assemble_bracket().result
    assert res.coefficient(E22_X0) == (3 * v(2) - 2 * v(1) + 5) / 5
    assert res.coefficient(E11_PAIR) == (qf(1) + 1) * (3 * v(2) - 2 * v(1) + 5) / 5
    assert res.coefficient(E22_X) == (v(2) - 4 * v(1) + 5) / 5
    assert res.coefficient(E22_Y) == (6 * v(2) - 4 * v(1) + 5) / 5


def test_bracket_linear_in_t11_datum():
    base = assemble_bracket(LinComb()).result
    full = assemble_bracket().result
    coef = (1 - qf(-1)) / 2
    diff = full + base.scale(-1)
    assert diff.coefficient(E22_X0) == coef
    assert diff.coefficient(E11_PAIR) == coef * (qf(1) + 1)


def test_printed_forms_and_sum():
    rep = multiplicity_extraction(assemble_bracket())
    assert rep.scale == qf(2)
    pm = rep.printed_multiplicities
    assert pm[E11_PAIR] == qf(2) - qf(1)
    assert pm[E22_X] == qf(1) + 1
    assert pm[E22_Y] == RationalFunction.const(1)
    assert evaluate_multiplicities(pm, 2) == {
        E11_PAIR.render(): "2", E22_X.render(): "3", E22_Y.render(): "1",
    }
    assert rep.printed_total == qf(2) + 2
    assert rep.expected == qf(2) + 1
    assert set(printed_final().terms) == EXPECTED_SUPPORT


def test_quantum_reading_matches_printed_final():
    assert quantum_integer(2) * v(3) == qf(-1) + qf(-2)
