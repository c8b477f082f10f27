"""Graphs of Hecke operators on rank-2 bundles over P^1, up to twist.

Vertex n stands for the class of O + O(n).  The edge n -> n' carries the
polynomial sum of m_{x,r}((0,n), E') over the E' of class n'.  Only the
window 0..N is built; a vertex is interior when all its out-edges stay
inside the window, and operators are only evaluated at interior vertices.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Poly, gaussian_binomial
from .errors import ValidationError
from .hall.polynomials import multiplicity_polynomials


class ProjectiveClass(int):
    """n >= 0, the class of O + O(n) modulo line bundles."""

    def __new__(cls, n):
        n = int(n)
        if n < 0:
            raise ValidationError("projective class must be >= 0")
        return super().__new__(cls, n)

    @classmethod
    def of(cls, E):
        return cls(E.projective_class())

    def label(self):
        return f"O⊕O({int(self)})"


class HeckeGraph:
    def __init__(self, d, r, N, edges, interior):
        self.d = d
        self.r = r
        self.N = N
        # edges[n] = {target: Poly}
        self.edges = {n: dict(sorted(edges[n].items())) for n in sorted(edges)}
        self.interior = sorted(interior)

    @property
    def vertices(self):
        return list(range(self.N + 1))

    def is_interior(self, n):
        return n in self.interior

    def boundary(self):
        return [n for n in self.vertices if n not in self.interior]

    def out_weight(self, n) -> Poly:
        acc = Poly()
        for p in self.edges[n].values():
            acc = acc + p
        return acc

    def with_weight(self, source, target, weight):
        """Copy with one edge weight replaced (for negative controls)."""
        edges = {n: dict(e) for n, e in self.edges.items()}
        edges[source][target] = weight if isinstance(weight, Poly) else Poly.const(Fraction(weight))
        return HeckeGraph(self.d, self.r, self.N, edges, self.interior)

    def edge_list(self):
        return [(n, m, p) for n in self.vertices for m, p in self.edges[n].items()]

    def to_record(self):
        return {
            "point_degree": self.d,
            "weight": self.r,
            "window": self.N,
            "vertices": [{"class": n, "label": ProjectiveClass(n).label(), "interior": n in self.interior}
                         for n in self.vertices],
            "edges": [{"source": n, "target": m, "weight": p.render("q")} for n, m, p in self.edge_list()],
        }

    def to_json(self):
        return json.dumps(self.to_record(), indent=2, ensure_ascii=False, sort_keys=False)

    def to_dot(self):
        lines = [f"digraph hecke_d{self.d}_r{self.r} {{"]
        for n in self.vertices:
            style = "" if n in self.interior else ", style=dashed"
            lines.append(f'  v{n} [label="{ProjectiveClass(n).label()}"{style}];')
        for m in sorted({m for _, m, _ in self.edge_list() if m > self.N}):
            lines.append(f'  v{m} [label="{ProjectiveClass(m).label()}", style=dotted];')
        for n, m, p in self.edge_list():
            lines.append(f'  v{n} -> v{m} [label="{p.render("q")}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"HeckeGraph(d={self.d}, r={self.r}, window 0..{self.N}, {len(self.edge_list())} edges)"


def build_graph(d: int, r: int, N: int, samples=None) -> HeckeGraph:
    if not isinstance(d, int) or d < 1:
        raise ValidationError("point degree must be >= 1")
    if r not in (1, 2):
        raise ValidationError("rank-2 graphs need weight 1 or 2")
    if not isinstance(N, int) or N < d:
        raise ValidationError(f"window bound N={N} is too small; need N >= d = {d}")
    edges, interior = {}, []
    for n in range(N + 1):
        table = multiplicity_polynomials((0, n), d, r, samples)
        out = {}
        for E, p in table.items():
            m = E.projective_class()
            out[m] = out.get(m, Poly()) + p
        edges[n] = out
        if all(m <= N for m in out):
            interior.append(n)
    if not interior:
        raise ValidationError("window contains no interior vertex")
    return HeckeGraph(d, r, N, edges, interior)


def graph_from_pattern(pattern, N, d=1, r=1) -> HeckeGraph:
    """A graph given by a function n -> {target: Poly} (used for comparisons)."""
    edges = {n: pattern(n) for n in range(N + 1)}
    interior = [n for n in range(N + 1) if all(m <= N for m in edges[n])]
    return HeckeGraph(d, r, N, edges, interior)


class VertexFunction:
    """Exact values on the vertices 0..N of a window."""

    def __init__(self, values, N=None):
        if not isinstance(values, dict):
            values = dict(enumerate(values))
        if N is None:
            N = max(values) if values else -1
        missing = [n for n in range(N + 1) if n not in values]
        if missing:
            raise ValidationError(f"function undefined at vertices {missing}")
        self.N = N
        self.values = {n: values[n] for n in range(N + 1)}

    @classmethod
    def delta(cls, m, N):
        return cls({n: Fraction(int(n == m)) for n in range(N + 1)}, N)

    def __call__(self, n):
        return self.values[n]

    def __add__(self, other):
        N = min(self.N, other.N)
        return VertexFunction({n: self.values[n] + other.values[n] for n in range(N + 1)}, N)

    def scale(self, c):
        return VertexFunction({n: c * v for n, v in self.values.items()}, self.N)

    def __eq__(self, other):
        return isinstance(other, VertexFunction) and self.values == other.values


def apply_operator(f: VertexFunction, G: HeckeGraph, q, vertices=None) -> dict:
    """(Phi f)(n) = sum over edges n -> m of weight(q) f(m), at interior vertices."""
    if f.N < G.N:
        raise ValidationError(f"function window 0..{f.N} is smaller than the graph window 0..{G.N}")
    vertices = G.interior if vertices is None else vertices
    out = {}
    for n in vertices:
        if n not in G.interior:
            raise ValidationError(f"vertex {n} is on the boundary of the window")
        acc = 0
        for m, p in G.edges[n].items():
            acc = acc + p(Fraction(q)) * f(m)
        out[n] = acc
    return out


class CommutativityReport:
    def __init__(self, ok, region, discrepancies):
        self.ok = ok
        self.region = region
        self.discrepancies = discrepancies  # (delta source m, vertex n, xy value, yx value)

    def __bool__(self):
        return self.ok

    def max_deviation(self):
        return max((abs(a - b) for _, _, a, b in self.discrepancies), default=0)

    def to_record(self):
        return {
            "ok": self.ok,
            "region": self.region,
            "max_deviation": str(self.max_deviation()),
            "discrepancies": [
                {"delta_at": m, "vertex": n, "xy": str(a), "yx": str(b)} for m, n, a, b in self.discrepancies
            ],
        }


def _compose(G1, G2, f, q, region):
    # Phi_1 (Phi_2 f) on region; Phi_2 f is needed on every target of region's edges
    inner_vertices = sorted({m for n in region for m in G1.edges[n]})
    inner = apply_operator(f, G2, q, inner_vertices)
    return {n: sum((p(Fraction(q)) * inner[m] for m, p in G1.edges[n].items()), Fraction(0)) for n in region}


def check_graphs_commute(G1, G2, q) -> CommutativityReport:
    """Compare Phi_1 Phi_2 and Phi_2 Phi_1 on delta functions, on the doubly-interior region."""
    if G1.N != G2.N:
        raise ValidationError("graphs must share a window")
    N = G1.N
    region = [
        n for n in range(N + 1)
        if n in G1.interior and n in G2.interior
        and all(m in G2.interior for m in G1.edges[n]) and all(m in G1.interior for m in G2.edges[n])
    ]
    if not region:
        raise ValidationError("window too small: no doubly-interior vertex")
    bad = []
    for m in range(N + 1):
        f = VertexFunction.delta(m, N)
        a = _compose(G1, G2, f, q, region)
        b = _compose(G2, G1, f, q, region)
        bad.extend((m, n, a[n], b[n]) for n in region if a[n] != b[n])
    return CommutativityReport(not bad, region, bad)


def commutativity_check(d1: int, d2: int, r: int, N: int, q, samples=None) -> CommutativityReport:
    G1 = build_graph(d1, r, N, samples)
    G2 = G1 if d2 == d1 else build_graph(d2, r, N, samples)
    return check_graphs_commute(G1, G2, q)


def expected_out_weight(d, r):
    return gaussian_binomial(2, r).substitute_power(d)
