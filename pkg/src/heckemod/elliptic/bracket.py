"""Symbolic assembly of [K_x, E'] for the trace bundle E' = E^{(2,0)}_{(x,1)}.

K_x and E' are written through the T-generators, moved to the character
basis by exact inversion of the base-change matrix, bracketed using the two
quoted straightening relations, moved back to closed points, and finally
expanded into Atiyah classes.  Every stage is kept in a transcript.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra import gaussian_binomial
from ..algebra.ratfunc import RationalFunction, quantum_integer
from ..errors import InvariantError
from ..hall.classes import euler_form
from .characters import base_change
from .curve import closed_point, count_points

v = RationalFunction.v
q = RationalFunction.q
Q2 = quantum_integer(2)
ONE = RationalFunction.const(1)


# -- symbols -------------------------------------------------------------------


class Sym:
    """Base for hashable basis symbols; subclasses define ``key``."""

    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__, self.key()))

    def __lt__(self, other):
        return (type(self).__name__, self.key()) < (type(other).__name__, other.key())

    def __repr__(self):
        return self.render()


class TPoint(Sym):
    """T_{v,z}."""

    __slots__ = ("v", "z")

    def __init__(self, v, z):
        self.v, self.z = tuple(v), z

    def key(self):
        return (self.v, self.z)

    def render(self):
        return f"T{self.v},{self.z}".replace(" ", "")


class TChar(Sym):
    """T_v^{rho~_i}."""

    __slots__ = ("v", "i")

    def __init__(self, v, i):
        self.v, self.i = tuple(v), i

    def key(self):
        return (self.v, self.i)

    def render(self):
        return f"T{self.v}^rho~{self.i}".replace(" ", "")


class Product(Sym):
    __slots__ = ("factors",)

    def __init__(self, *factors):
        self.factors = tuple(factors)

    def key(self):
        return tuple((type(f).__name__, f.key()) for f in self.factors)

    def render(self):
        return "*".join(f.render() for f in self.factors)


class Bracket(Sym):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left, self.right = left, right

    def key(self):
        return (self.left.key(), self.right.key())

    def render(self):
        return f"[{self.left.render()}, {self.right.render()}]"


class AtiyahLabel(Sym):
    """E^{(n,d)}_{(z,l)}: indecomposable of rank n, degree d at z with l*deg z = gcd(n, d)."""

    __slots__ = ("rank", "degree", "point", "point_degree", "ell")
    genus = 1

    def __init__(self, rank, degree, point, point_degree, ell):
        from math import gcd

        if ell * point_degree != gcd(rank, degree):
            raise InvariantError(f"l*deg z = {ell * point_degree} differs from gcd({rank},{degree})")
        self.rank, self.degree, self.point, self.point_degree, self.ell = rank, degree, point, point_degree, ell

    def key(self):
        return (self.rank, self.degree, self.point, self.point_degree, self.ell)

    def render(self):
        return f"E({self.rank},{self.degree})_({self.point},{self.ell})"


class AtiyahSum(Sym):
    """A direct sum of Atiyah bundles, as a sorted multiset."""

    __slots__ = ("labels",)
    genus = 1

    def __init__(self, *labels):
        self.labels = tuple(sorted(labels))

    @property
    def rank(self):
        return sum(lab.rank for lab in self.labels)

    @property
    def degree(self):
        return sum(lab.degree for lab in self.labels)

    def key(self):
        return tuple(lab.key() for lab in self.labels)

    def render(self):
        return " ⊕ ".join(lab.render() for lab in self.labels)


class SheafClass:
    """Rank and degree of a sheaf on the elliptic curve, for the Euler form."""

    genus = 1

    def __init__(self, rank, degree):
        self.rank, self.degree = rank, degree


E11 = AtiyahLabel(1, 1, "x0", 1, 1)
E11_PAIR = AtiyahSum(E11, E11)
E22_X0 = AtiyahSum(AtiyahLabel(2, 2, "x0", 1, 2))
E22_X = AtiyahSum(AtiyahLabel(2, 2, "x", 2, 1))
E22_Y = AtiyahSum(AtiyahLabel(2, 2, "y", 2, 1))


# -- linear combinations -------------------------------------------------------------


def _rf(c):
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction.const(c)


class LinComb:
    """Finite linear combination of symbols with coefficients in Q(zeta_5)(v)."""

    def __init__(self, terms=None):
        out = {}
        for s, c in dict(terms or {}).items():
            c = _rf(c)
            if not c.is_zero():
                out[s] = c
        self.terms = out

    @classmethod
    def of(cls, sym, c=1):
        return cls({sym: c})

    def __add__(self, other):
        t = dict(self.terms)
        for s, c in other.terms.items():
            t[s] = t.get(s, RationalFunction.const(0)) + c
        return LinComb(t)

    def scale(self, c):
        c = _rf(c)
        return LinComb({s: x * c for s, x in self.terms.items()})

    def substitute(self, rules):
        """Replace each symbol with a LinComb given by rules(sym) (None keeps it)."""
        acc = LinComb()
        for s, c in self.terms.items():
            rep = rules(s)
            acc = acc + (LinComb.of(s, c) if rep is None else rep.scale(c))
        return acc

    def coefficient(self, sym):
        return self.terms.get(sym, RationalFunction.const(0))

    def support(self):
        return set(self.terms)

    def is_zeta_free(self):
        return all(c.is_zeta_free() for c in self.terms.values())

    def symbols_of(self, kind):
        return [s for s in self.terms if isinstance(s, kind)]

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c.render()})*{s.render()}" for s, c in self.items())

    def to_record(self):
        return [{"symbol": s.render(), "coefficient": c.render()} for s, c in self.items()]


# -- the assembly -----------------------------------------------------------------------

V02, V20, V11, V22 = (0, 2), (2, 0), (1, 1), (2, 2)


def _c(i):
    """c_i = q^(-1/2) [i] #X(F_{q^i}) / i."""
    return v(1) * quantum_integer(i) * Fraction(count_points(i)[0], i)


def default_t11_product():
    """T_{(1,1),x0} T_{(1,1),x0} = E^{(2,2)}_{(x0,2)} + (q+1) E^{(1,1)}_{(x0,1)} + E^{(1,1)}_{(x0,1)}.

    Computed elsewhere in the ring of symmetric functions; shipped as data.
    """
    return LinComb({E22_X0: ONE, E11_PAIR: q(1) + 1})


def printed_intermediate():
    """The printed coefficients of [K_x, E'] in the T_{(2,2),z} and T_{(1,1),x0}^2 basis."""
    T11sq = Product(TPoint(V11, "x0"), TPoint(V11, "x0"))
    return LinComb({
        T11sq: (q(-1) - q(-2)) / 2,
        TPoint(V22, "x0"): (q(-2) - q(-1)) / Q2,
        TPoint(V22, "x"): v(3) / Q2,
        TPoint(V22, "y"): q(-2) / Q2,
    })


def printed_final():
    return LinComb({E11_PAIR: 1 - q(-1), E22_X: q(-2) + q(-1), E22_Y: q(-2)})


EXPECTED_SUPPORT = frozenset({E11_PAIR, E22_X, E22_Y})


class Step:
    def __init__(self, name, description, value):
        self.name = name
        self.description = description
        self.value = value

    def to_record(self):
        if isinstance(self.value, LinComb):
            body = self.value.to_record()
        else:
            body = self.value
        return {"step": self.name, "description": self.description, "value": body}


def _atiyah_rules(t11_product):
    T11sq = Product(TPoint(V11, "x0"), TPoint(V11, "x0"))

    def rules(s):
        if s == TPoint(V22, "x0"):
            return LinComb({E22_X0: ONE, E11_PAIR: q(1) + 1}).scale(Q2 / 2)
        if s == TPoint(V22, "x"):
            return LinComb.of(E22_X, Q2)
        if s == TPoint(V22, "y"):
            return LinComb.of(E22_Y, Q2)
        if s == T11sq:
            return t11_product
        return None

    return rules


class BracketResult:
    def __init__(self, steps, intermediate, result, comparisons, printed_substituted):
        self.steps = steps
        self.intermediate = intermediate
        self.result = result
        self.comparisons = comparisons
        self.printed_substituted = printed_substituted

    def support(self):
        return frozenset(self.result.support())

    def support_matches(self):
        return self.support() == EXPECTED_SUPPORT

    def is_zeta_free(self):
        return self.result.is_zeta_free()

    def to_record(self):
        return {
            "steps": [s.to_record() for s in self.steps],
            "result": self.result.to_record(),
            "zeta_free": self.is_zeta_free(),
            "support": sorted(s.render() for s in self.support()),
            "expected_support": sorted(s.render() for s in EXPECTED_SUPPORT),
            "support_matches": self.support_matches(),
            "comparisons": self.comparisons,
            "printed_intermediate_substituted": self.printed_substituted.to_record(),
        }


def _compare(label, computed: LinComb, printed: LinComb):
    rows = []
    for s in sorted(computed.support() | printed.support()):
        a, b = computed.coefficient(s), printed.coefficient(s)
        rows.append({
            "symbol": s.render(),
            "computed": a.render(),
            "printed": b.render(),
            "agree": a == b,
            "ratio": (a / b).render() if not b.is_zero() and not a.is_zero() else None,
        })
    return {"stage": label, "rows": rows, "all_agree": all(r["agree"] for r in rows)}


def assemble_bracket(t11_product=None) -> BracketResult:
    t11_product = default_t11_product() if t11_product is None else t11_product
    steps = []
    x = closed_point("x")
    K = LinComb.of(TPoint(V02, x.name), ONE / Q2)
    Ep = LinComb.of(TPoint(V20, x.name), ONE / Q2)
    steps.append(Step("generators", "K_x = T_{(0,2),x}/[2] and E' = T_{(2,0),x}/[2]", K + Ep))

    bc = {w: base_change(w) for w in (V02, V20, V22, V11)}
    steps.append(Step("base_change", "character bases for (0,2), (2,0), (2,2), (1,1)",
                      {str(w): b.to_record() for w, b in bc.items()}))

    def to_chars(w):
        def rules(s):
            if isinstance(s, TPoint) and s.v == w:
                coeffs = bc[w].point_in_characters(s.z)
                return LinComb({TChar(w, bc[w].reps[i].index): _rf(c) for i, c in enumerate(coeffs)})
            return None
        return rules

    Kc = K.substitute(to_chars(V02))
    Ec = Ep.substitute(to_chars(V20))
    steps.append(Step("to_characters", "T_{v,x} written in the basis T_v^{rho~} by inverting base change", Kc + Ec))

    # bilinear expansion; distinct character orbits commute, so only diagonal brackets survive
    br = LinComb()
    for a, ca in Kc.terms.items():
        for b, cb in Ec.terms.items():
            if a.i == b.i:
                br = br + LinComb.of(Bracket(a, b), ca * cb)
    steps.append(Step("commute", "off-diagonal brackets vanish between different character orbits", br))

    c1, c2 = _c(1), _c(2)
    steps.append(Step("constants", "c_1 and c_2", {"c1": c1.render(), "c2": c2.render()}))
    rel0_prod = c2 * c2 * (v(-1) - v(1)) / (2 * c1)
    rel0_t22 = c2 * (c2 / c1 - 2)
    rel_i = 5 * Q2 / (2 * q(1))

    def relations(s):
        if isinstance(s, Bracket):
            i = s.left.i
            if i == 0:
                return LinComb({
                    Product(TChar(V11, 0), TChar(V11, 0)): rel0_prod,
                    TChar(V22, 0): rel0_t22,
                })
            return LinComb.of(TChar(V22, i), rel_i)
        return None

    straightened = br.substitute(relations)
    steps.append(Step("relations", "quoted bracket relations in each character orbit", straightened))

    def back_to_points(s):
        if isinstance(s, TChar) and s.v == V22:
            row = bc[V22].to_characters[[r.index for r in bc[V22].reps].index(s.i)]
            return LinComb({TPoint(V22, z.name): _rf(c) for z, c in zip(bc[V22].points, row)})
        if isinstance(s, Product) and all(isinstance(f, TChar) and f.v == V11 for f in s.factors):
            return LinComb.of(Product(*[TPoint(V11, "x0") for _ in s.factors]), ONE)
        return None

    intermediate = straightened.substitute(back_to_points)
    steps.append(Step("to_points", "back to T_{(2,2),z} and T_{(1,1),x0}^2", intermediate))

    rules = _atiyah_rules(t11_product)
    result = intermediate.substitute(rules)
    steps.append(Step("atiyah", "expand T_{(2,2),z} and the T_{(1,1),x0} product into Atiyah classes", result))

    leftovers = [s for s in result.terms if not isinstance(s, AtiyahSum)]
    if leftovers:
        raise InvariantError(f"unresolved symbols remain: {[s.render() for s in leftovers]}")
    if not result.is_zeta_free():
        raise InvariantError("zeta survives in the assembled bracket")

    printed_sub = printed_intermediate().substitute(rules)
    comparisons = [
        _compare("intermediate (T basis)", intermediate, printed_intermediate()),
        _compare("final (Atiyah classes)", result, printed_final()),
        _compare("printed intermediate, expanded vs printed final", printed_sub, printed_final()),
    ]
    return BracketResult(steps, intermediate, result, comparisons, printed_sub)


class ExtractionReport:
    def __init__(self, scale, multiplicities, total, expected, printed_multiplicities, printed_total):
        self.scale = scale
        self.multiplicities = multiplicities
        self.total = total
        self.expected = expected
        self.printed_multiplicities = printed_multiplicities
        self.printed_total = printed_total

    def to_record(self):
        def enc(m):
            return [{"class": s.render(), "multiplicity": c.render()} for s, c in sorted(m.items())]

        return {
            "scale": self.scale.render(),
            "computed": enc(self.multiplicities),
            "computed_sum": self.total.render(),
            "printed": enc(self.printed_multiplicities),
            "printed_sum": self.printed_total.render(),
            "expected_sum": self.expected.render(),
            "computed_sum_matches": self.total == self.expected,
            "printed_sum_matches": self.printed_total == self.expected,
        }


def multiplicity_extraction(bracket) -> ExtractionReport:
    """Rescale by v^<K_x, E'> (i.e. q^2 here) and compare the sum with #P^1(F_{q^2})."""
    lin = bracket.result if isinstance(bracket, BracketResult) else bracket
    K = SheafClass(0, closed_point("x").degree)
    Ep = SheafClass(2, 0)
    scale = v(euler_form(K, Ep))
    mult = {s: c * scale for s, c in lin.terms.items()}
    total = sum(mult.values(), RationalFunction.const(0))
    expected = RationalFunction.from_q_poly(gaussian_binomial(2, 1).substitute_power(2))
    printed = {s: c * scale for s, c in printed_final().terms.items()}
    printed_total = sum(printed.values(), RationalFunction.const(0))
    return ExtractionReport(scale, mult, total, expected, printed, printed_total)


def evaluate_multiplicities(mult: dict, qv):
    """Evaluate each multiplicity at a concrete q; half-powers are reported, not rounded."""
    return {s.render(): c.evaluate(qv).render() for s, c in sorted(mult.items())}


__all__ = [
    "AtiyahLabel",
    "AtiyahSum",
    "BracketResult",
    "LinComb",
    "assemble_bracket",
    "evaluate_multiplicities",
    "multiplicity_extraction",
]
