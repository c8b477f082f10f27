from fractions import Fraction

import pytest

from heckemod.algebra import Poly
from heckemod.errors import ValidationError
from heckemod.graphs import (
    VertexFunction,
    apply_operator,
    build_graph,
    check_graphs_commute,
    commutativity_check,
    expected_out_weight,
    graph_from_pattern,
)

q = Poly.monomial(1, 1)
one = Poly.const(1)


def oracle_tree(n):
    # sub-bundles of O+O(n), n >= 1, at a rational point: the O(n)-fiber line gives
    # O(-1)+O(n) (class n+1), the other q lines give O+O(n-1) (class n-1)
    if n == 0:
        return {1: q + one}
    return {n - 1: q, n + 1: one}


def test_degree1_graph_matches_line_count():
    G = build_graph(1, 1, 8)
    for n in G.vertices:
        assert G.edges[n] == oracle_tree(n)
    assert G.interior == list(range(8))


def test_out_weights():
    for d, r in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        G = build_graph(d, r, 6)
        for n in G.vertices:
            assert G.out_weight(n) == expected_out_weight(d, r)


def test_weight2_is_identity_on_classes():
    G = build_graph(1, 2, 5)
    assert all(G.edges[n] == {n: one} for n in G.vertices)


def test_commutativity_and_negative_control():
    G1, G2 = build_graph(1, 1, 12), build_graph(2, 1, 12)
    rep = check_graphs_commute(G1, G2, 2)
    assert rep.ok and rep.max_deviation() == 0
    bad = check_graphs_commute(G1.with_weight(3, 4, 5), G2, 2)
    assert not bad.ok and bad.discrepancies
    assert commutativity_check(1, 3, 1, 14, 3).ok


def test_graph_validation():
    with pytest.raises(ValidationError):
        build_graph(2, 1, 1)
    with pytest.raises(ValidationError):
        build_graph(1, 3, 5)
    with pytest.raises(ValidationError):
        build_graph(0, 1, 5)


def test_apply_operator():
    G = build_graph(1, 1, 6)
    f = VertexFunction([Fraction(n) for n in range(7)])
    out = apply_operator(f, G, 2)
    # (Phi f)(n) = 2 (n-1) + (n+1) for n >= 1, and 3 * 1 at 0
    assert out[0] == 3
    assert out[3] == 2 * 2 + 4
    with pytest.raises(ValidationError):
        apply_operator(f, G, 2, vertices=[6])
    with pytest.raises(ValidationError):
        apply_operator(VertexFunction([1, 2]), G, 2)


def test_apply_is_linear():
    G = build_graph(2, 1, 8)
    f = VertexFunction.delta(3, 8)
    g = VertexFunction.delta(5, 8)
    lhs = apply_operator(f.scale(2) + g, G, 3)
    a, b = apply_operator(f, G, 3), apply_operator(g, G, 3)
    assert lhs == {n: 2 * a[n] + b[n] for n in lhs}


def test_exports_deterministic():
    G = build_graph(1, 1, 6)
    assert G.to_dot() == build_graph(1, 1, 6).to_dot()
    dot = G.to_dot()
    assert 'label="q + 1"' in dot and 'label="q"' in dot and 'label="1"' in dot
    assert 'v6 [label="O⊕O(6)", style=dashed]' in dot
    rec = G.to_record()
    assert [e["target"] for e in rec["edges"] if e["source"] == 3] == [2, 4]


def test_graph_from_pattern():
    G = graph_from_pattern(oracle_tree, 8)
    assert G.edges == build_graph(1, 1, 8).edges


@pytest.mark.slow
def test_degree5_graph_vertex0():
    G = build_graph(5, 1, 10)
    assert G.edges[0] == {1: q**5 - q**3, 3: q**3 - q, 5: q + one}


@pytest.mark.parametrize("z,qq", [(Fraction(3), 2), (Fraction(-1, 2), 3)])
def test_geometric_function_is_eigen_on_interior(z, qq):
    G = build_graph(1, 1, 8)
    f = VertexFunction({n: z**n for n in range(9)}, 8)
    out = apply_operator(f, G, qq)
    lam = qq / z + z
    for n in range(1, 8):
        assert out[n] == lam * z**n
