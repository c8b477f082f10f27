"""Points, fiber subspaces and the h0 oracle on P^1.

The main oracle here counts global sections by brute force: a section of
O(a) over P^1 is a polynomial of degree <= a in the affine coordinate, and
a section of the modification lies in W at x.  That gives h0(E'(m)) with
no linear algebra from the package involved.
"""

from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemod.algebra import field_of_order, fqpoly, gaussian_binomial
from heckemod.errors import ResourceCapError, ValidationError
from heckemod.p1 import (
    FiberSubspace,
    SplittingType,
    closed_points,
    first_point,
    iter_subspaces,
    modify,
    modify_ladder,
    modify_multi,
    multiplicity_table,
    necklace_count,
    point_by_index,
    point_from_string,
    subspace_by_index,
    subspace_count,
)
from heckemod.p1.subspaces import kernel_basis

# -- brute-force oracle ------------------------------------------------------------


def _sections(F, deg):
    if deg < 0:
        return [[]]
    return [list(c) for c in product(range(F.q), repeat=deg + 1)]


def brute_h0(E, conditions, m):
    """h0 of the modification, twisted by m, by enumerating sections."""
    F = conditions[0].point.field
    spaces = [_sections(F, a + m) for a in E.entries]
    count = 0
    for sec in product(*spaces):
        ok = True
        for W in conditions:
            K = W.point.residue
            if not W.contains(tuple(K.reduce(s) for s in sec)):
                ok = False
                break
        count += ok
    h = 0
    while F.q**h < count:
        h += 1
    assert F.q**h == count
    return h


def brute_type(E, conditions):
    E = SplittingType(E) if not isinstance(E, SplittingType) else E
    drop = sum(W.point.degree for W in conditions)
    lo, hi = min(E.entries) - drop, max(E.entries)
    h = {m: brute_h0(E, conditions, m) for m in range(-hi - 1, -lo + 1)}
    # #{i : a'_i >= b} = h0(-b) - h0(-b-1)
    at_least = {b: h[-b] - h[-b - 1] for b in range(lo, hi + 1)}
    entries = []
    for b in range(lo, hi + 1):
        above = at_least.get(b + 1, 0)
        entries += [b] * (at_least[b] - above)
    return SplittingType(entries)


# -- points -----------------------------------------------------------------------


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_closed_points_are_the_irreducibles(q, d):
    F = field_of_order(q)
    pts = closed_points(q, d)
    assert len(pts) == necklace_count(q, d)
    brute = [tuple(f) for f in fqpoly.iter_monic(F, d) if _no_factor(F, f)]
    assert sorted(brute) == sorted(x.poly for x in pts)


def _no_factor(F, f):
    d = fqpoly.degree(f)
    return all(fqpoly.mod(F, f, g) for e in range(1, d // 2 + 1) for g in fqpoly.iter_monic(F, e))


def test_first_points():
    assert first_point(2, 5).render() == "t^5 + t^3 + 1"
    assert first_point(3, 5).render() == "t^5 + 2*t^4 + 1"
    assert point_by_index(2, 1, 0).render() == "t"
    assert point_by_index(2, 1, 1).render() == "t + 1"


def test_point_validation():
    with pytest.raises(ValidationError):
        point_from_string(2, "t^2+1")
    with pytest.raises(ValidationError):
        point_by_index(2, 1, 5)
    with pytest.raises(ValidationError):
        closed_points(2, 0)


def test_residue_field_arithmetic():
    x = point_from_string(2, "t^3+t+1")
    K = x.residue
    for a in K.elements():
        if not K.is_zero(a):
            assert K.mul(a, K.inv(a)) == K.one
        assert K.mul_t(a) == K.mul(a, (0, 1, 0))


# -- subspaces --------------------------------------------------------------------------


@pytest.mark.parametrize("q,d,n,r", [(2, 1, 2, 1), (3, 1, 2, 1), (2, 2, 2, 1), (2, 1, 3, 1), (2, 1, 3, 2), (3, 1, 3, 2)])
def test_subspace_enumeration(q, d, n, r):
    x = first_point(q, d)
    subs = list(iter_subspaces(x, n, r))
    assert len(subs) == subspace_count(x, n, r) == gaussian_binomial(n, r, q**d)
    assert len(set(subs)) == len(subs)
    for i, W in enumerate(subs):
        assert subspace_by_index(x, n, r, i) == W
        assert len(W.basis()) == n - r


def test_exhaustive_lines_in_f32_squared():
    """Every line of F_32^2 is listed once: 33 lines, each spanned by one of its vectors."""
    x = first_point(2, 5)
    K = x.residue
    lines = list(iter_subspaces(x, 2, 1))
    assert len(lines) == 33
    seen = set()
    for a in K.elements():
        for b in K.elements():
            if K.is_zero(a) and K.is_zero(b):
                continue
            seen.add(FiberSubspace.span(x, [(a, b)]))
    assert seen == set(lines)


def test_span_and_functionals_agree():
    x = first_point(3, 1)
    W = FiberSubspace.span(x, [(1, 2, 0)], 3)
    assert W.r == 2
    K = x.residue
    assert W.contains((K.from_base(1), K.from_base(2), K.zero))
    assert not W.contains((K.one, K.zero, K.zero))
    assert len(kernel_basis(x.residue, list(W.functionals), 3)) == 1


def test_dependent_functionals_rejected():
    x = first_point(2, 1)
    with pytest.raises(ValidationError):
        FiberSubspace(x, 2, [[1, 1], [1, 1]])
    with pytest.raises(ValidationError):
        FiberSubspace(x, 2, [[1, 1, 0]])
    with pytest.raises(ValidationError):
        subspace_by_index(x, 2, 1, 3)


# -- modify: examples ----------------------------------------------------------------


def test_modify_examples():
    x5 = point_from_string(2, "t^5+t^2+1")
    got = modify((0, 0), x5, subspace_by_index(x5, 2, 1, 0))
    assert got in {SplittingType((-5, 0)), SplittingType((-4, -1)), SplittingType((-3, -2))}
    t = point_from_string(2, "t")
    assert modify((0, 0), t, FiberSubspace.zero(t, 2)) == SplittingType((-1, -1))
    x1 = point_from_string(2, "t+1")
    assert modify((3, 3), x1, subspace_by_index(x1, 2, 1, 1)) == SplittingType((2, 3))
    assert modify((0, 0), t, FiberSubspace.full(t, 2)) == SplittingType((0, 0))


def test_modify_example_w_kills_o3():
    """(0,3) with W the kernel of projection onto O(3) at t gives (0,2)."""
    t = point_from_string(2, "t")
    W = FiberSubspace(t, 2, [[0, 1]])
    assert modify((0, 3), t, W) == SplittingType((0, 2))
    W2 = FiberSubspace(t, 2, [[1, 0]])
    assert modify((0, 3), t, W2) == SplittingType((-1, 3))


def test_modify_validation():
    t = point_from_string(2, "t")
    s = point_from_string(3, "t")
    with pytest.raises(ValidationError):
        modify((0, 0, 0), t, FiberSubspace(t, 2, [[1, 0]]))
    with pytest.raises(ValidationError):
        modify_multi((0, 0), [FiberSubspace(t, 2, [[1, 0]]), FiberSubspace(s, 2, [[1, 0]])])
    with pytest.raises(ValidationError):
        modify_multi((0, 0), [FiberSubspace(t, 2, [[1, 0]]), FiberSubspace(t, 2, [[0, 1]])])


# -- modify: against the brute-force oracle ---------------------------------------------------


CASES = [
    (2, 1, (0, 0)), (2, 1, (0, 1)), (2, 1, (-1, 2)), (2, 2, (0, 0)), (2, 2, (0, 1)),
    (3, 1, (0, 0)), (3, 1, (0, 2)), (2, 1, (0, 0, 1)), (2, 3, (0, 0)),
]


@pytest.mark.parametrize("q,d,E", CASES)
def test_modify_matches_section_count(q, d, E):
    x = first_point(q, d)
    for r in range(1, len(E) + 1):
        for W in iter_subspaces(x, len(E), r):
            assert modify(E, x, W) == brute_type(E, [W]), (E, x, W)


def test_modify_multi_matches_section_count():
    x, y = point_by_index(2, 1, 0), point_by_index(2, 1, 1)
    for Wx in iter_subspaces(x, 2, 1):
        for Wy in iter_subspaces(y, 2, 1):
            assert modify_multi((0, 1), [Wx, Wy]) == brute_type(SplittingType((0, 1)), [Wx, Wy])


@pytest.mark.parametrize("q,d,E", CASES[:6])
def test_fast_and_reference_agree(q, d, E):
    x = first_point(q, d)
    for W in iter_subspaces(x, len(E), 1):
        assert modify(E, x, W, method="fast") == modify(E, x, W, method="reference")


def test_ladder_record():
    t = point_from_string(2, "t")
    lad = modify_ladder((0, 0), t, FiberSubspace(t, 2, [[1, 0]]))
    rec = lad.to_record()
    assert rec["result"] == [-1, 0]
    assert all(set(row) == {"twist", "h0"} for row in rec["h0"])


# -- properties --------------------------------------------------------------------------------


types2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@settings(max_examples=60, deadline=None)
@given(types2, st.integers(-4, 4), st.sampled_from([(2, 1), (3, 1), (2, 2), (4, 1)]), st.data())
def test_twist_equivariance(E, k, qd, data):
    q, d = qd
    x = first_point(q, d)
    i = data.draw(st.integers(0, subspace_count(x, 2, 1) - 1))
    W = subspace_by_index(x, 2, 1, i)
    E = SplittingType(E)
    assert modify(E.twist(k), x, W) == modify(E, x, W).twist(k)


@settings(max_examples=60, deadline=None)
@given(types2, st.sampled_from([(2, 1), (3, 1), (2, 2), (2, 3)]), st.data())
def test_degree_and_bounds(E, qd, data):
    q, d = qd
    x = first_point(q, d)
    i = data.draw(st.integers(0, subspace_count(x, 2, 1) - 1))
    W = subspace_by_index(x, 2, 1, i)
    E = SplittingType(E)
    out = modify(E, x, W)
    assert out.degree == E.degree - d
    assert min(out.entries) >= min(E.entries) - d
    assert max(out.entries) <= max(E.entries)


@settings(max_examples=40, deadline=None)
@given(types2, st.data())
def test_order_independence(E, data):
    x, y = point_by_index(3, 1, 0), point_by_index(3, 2, 0)
    Wx = subspace_by_index(x, 2, 1, data.draw(st.integers(0, 3)))
    Wy = subspace_by_index(y, 2, 1, data.draw(st.integers(0, 9)))
    assert modify_multi(E, [Wx, Wy]) == modify_multi(E, [Wy, Wx])
    assert modify_multi(E, [Wx, Wy]).degree == SplittingType(E).degree - 3


# -- multiplicity tables -----------------------------------------------------------------------------


def test_degree5_tables():
    t2 = multiplicity_table((0, 0), first_point(2, 5), 1)
    assert t2.counts == {SplittingType((-5, 0)): 3, SplittingType((-4, -1)): 6, SplittingType((-3, -2)): 24}
    t3 = multiplicity_table((0, 0), first_point(3, 5), 1)
    assert sorted(t3.counts.values()) == [4, 24, 216]
    assert t3.total == 244


def test_table_record_is_canonical():
    t = multiplicity_table((0, 0), first_point(2, 5), 1)
    rec = t.to_record()
    assert list(rec) == ["base_field", "point", "source", "weight", "table", "total"]
    assert rec["base_field"] == {"p": 2, "k": 1}
    assert [row["type"] for row in rec["table"]] == sorted(row["type"] for row in rec["table"])


def test_table_matches_tally_of_modify():
    x = first_point(3, 2)
    t = multiplicity_table((0, 1), x, 1)
    tally = Counter(modify((0, 1), x, W) for W in iter_subspaces(x, 2, 1))
    assert t.counts == dict(tally)


@pytest.mark.parametrize("q,d", [(2, 1), (3, 1), (4, 1), (2, 2)])
def test_table_independent_of_point(q, d):
    pts = closed_points(q, d)
    tables = {tuple(sorted(multiplicity_table((-1, 2), x, 1).counts.items())) for x in pts}
    assert len(tables) == 1


def test_table_cap_and_validation():
    x = first_point(9, 3)
    with pytest.raises(ResourceCapError) as err:
        multiplicity_table((0, 0, 0), x, 1, cap=1000)
    assert err.value.required == gaussian_binomial(3, 1, 9**3)
    with pytest.raises(ValidationError):
        multiplicity_table((0, 0), x, 3)


def test_rank3_weight2_sum():
    x = first_point(2, 1)
    assert multiplicity_table((0, 1, 2), x, 2).total == 7
