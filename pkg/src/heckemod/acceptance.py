"""The acceptance suite as plain functions, shared by ``selftest`` and pytest.

Each check returns a :class:`CriterionResult`; nothing here is loosened to
pass.  Failures carry a detail string describing what was observed.
"""

from __future__ import annotations

import time
from itertools import combinations_with_replacement, product

from .algebra import Poly
from .elliptic.bracket import assemble_bracket, multiplicity_extraction
from .elliptic.characters import PicardGroup, base_change, orthogonality_matrix
from .elliptic.curve import CURVE, closed_points_elliptic, count_points, render_point
from .graphs import build_graph, commutativity_check
from .hall.polynomials import multiplicity_polynomials
from .p1.lattice import LatticeData, QuasiParabolicData, elementary_transform_compose, hecke_transform
from .p1.oracle import multiplicity_table
from .p1.points import first_point, point_by_index
from .p1.splitting import SplittingType


class CriterionResult:
    def __init__(self, number, title, passed, detail="", seconds=0.0):
        self.number = number
        self.title = title
        self.passed = passed
        self.detail = detail
        self.seconds = seconds

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) {self.detail}".rstrip()

    def to_record(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "detail": self.detail,
        }


def _types(d):
    return {SplittingType(k): v for k, v in d.items()}


def _q():
    return Poly.monomial(1, 1)


# 1 -------------------------------------------------------------------------


def criterion_1():
    expected = {
        2: _types({(-5, 0): 3, (-3, -2): 24, (-4, -1): 6}),
        3: _types({(-5, 0): 4, (-3, -2): 216, (-4, -1): 24}),
    }
    totals = {2: 33, 3: 244}
    notes, ok = [], True
    for q in (2, 3):
        x = first_point(q, 5)
        t0 = time.perf_counter()
        table = multiplicity_table((0, 0), x, 1)
        dt = time.perf_counter() - t0
        good = table.counts == expected[q] and table.total == totals[q] and dt < 1.0
        ok &= good
        notes.append(f"F_{q}: total {table.total} in {dt:.3f}s{'' if good else ' MISMATCH ' + repr(table)}")
    return ok, "; ".join(notes)


# 2 -------------------------------------------------------------------------


def criterion_2():
    q = _q()
    one = Poly.const(1)
    t0 = time.perf_counter()
    a = multiplicity_polynomials((0, 0), 5, 1)
    want_a = {
        SplittingType((-5, 0)): q + one,
        SplittingType((-4, -1)): q**3 - q,
        SplittingType((-3, -2)): q**5 - q**3,
    }
    b = multiplicity_polynomials((-5, 5), 5, 1)
    want_b = {SplittingType((-5, 0)): q**5, SplittingType((-10, 5)): one}
    dt = time.perf_counter() - t0
    ok = (
        len(a.samples) >= 7 and len(b.samples) >= 7
        and a.polynomials == want_a and b.polynomials == want_b and dt < 60
    )
    detail = f"(0,0): {a!r}; (-5,5): {b!r}; samples {a.samples}; {dt:.1f}s"
    return ok, detail


# 3 -------------------------------------------------------------------------


def criterion_3():
    checked, bad = 0, []
    sources = list(combinations_with_replacement(range(-4, 5), 2))
    for q in (2, 3, 4):
        for d in (1, 2, 3):
            x = first_point(q, d)
            for E in sources:
                total = multiplicity_table(E, x, 1).total
                checked += 1
                if total != q**d + 1:
                    bad.append((E, q, d, total))
    for d in (1, 2, 3):
        x = first_point(2, d)
        total = multiplicity_table((-1, 0, 2), x, 1).total
        checked += 1
        if total != 2 ** (2 * d) + 2**d + 1:
            bad.append(((-1, 0, 2), 2, d, total))
    return not bad, f"{checked} tables checked, {len(bad)} failures {bad[:3] if bad else ''}".rstrip()


# 4 -------------------------------------------------------------------------


def stated_tree_pattern(n):
    q = _q()
    if n == 0:
        return {1: q + Poly.const(1)}
    return {n - 1: Poly.const(1), n + 1: q}


def criterion_4():
    G = build_graph(1, 1, 8)
    mismatches = []
    for n in G.vertices:
        want = stated_tree_pattern(n)
        got = G.edges[n]
        if got != want:
            mismatches.append(
                f"{n}: got {{{', '.join(f'{m}: {p.render()}' for m, p in got.items())}}}"
                f" want {{{', '.join(f'{m}: {p.render()}' for m, p in want.items())}}}"
            )
    return not mismatches, f"{len(mismatches)} vertices differ" + (f"; e.g. {mismatches[1] if len(mismatches) > 1 else mismatches[0]}" if mismatches else "")


# 5 -------------------------------------------------------------------------


def criterion_5():
    rep = commutativity_check(1, 2, 1, 12, 2)
    return rep.ok, f"region {rep.region[0]}..{rep.region[-1]}, {len(rep.discrepancies)} discrepancies"


# 6 -------------------------------------------------------------------------


def elementary_law_checks(q, types=((0, 0), (0, 1), (-1, 1))):
    """Every marking of two degree-1 points, every T and R: (checks, failures)."""
    x, y = point_by_index(q, 1, 0), point_by_index(q, 1, 1)
    K = x.residue
    lines = [(K.one, K.element(i)) for i in range(K.size)] + [(K.zero, K.one)]
    subsets = [set(), {1}, {2}, {1, 2}]
    checks, failures = 0, []
    for E in types:
        for lx, ly in product(lines, repeat=2):
            data = QuasiParabolicData(E, [(x, lx), (y, ly)])
            if LatticeData.from_data(data).elementary({0, 1}).splitting_type() != hecke_transform(data):
                failures.append((E, lx, ly, "type"))
            for T, R in product(subsets, repeat=2):
                checks += 1
                if not elementary_transform_compose(data, T, R).agree:
                    failures.append((E, lx, ly, tuple(T), tuple(R)))
    return checks, failures


def criterion_6():
    notes, ok = [], True
    for q in (2, 3):
        checks, failures = elementary_law_checks(q)
        ok &= not failures
        notes.append(f"F_{q}: {checks} checks, {len(failures)} failures")
    return ok, "; ".join(notes)


# 7 -------------------------------------------------------------------------


def criterion_7():
    N1, pts1 = count_points(1)
    N2, pts2 = count_points(2)
    F = CURVE.field(2)
    listed = {"(0, 2)", "(0, 3)", "(1, 2)", "(1, 3)"}
    finite = {render_point(P) for P in pts2 if P is not None}
    deg2 = [z for z in closed_points_elliptic(2) if z.degree == 2]
    G = PicardGroup(2)
    x1 = G.generator
    order = next(k for k in range(1, 6) if CURVE.mul(k, x1, F) is None)
    assoc = all(
        CURVE.add(CURVE.add(P, Q, F), R, F) == CURVE.add(P, CURVE.add(Q, R, F), F)
        for P in pts2 for Q in pts2 for R in pts2
    )
    ok = N1 == 1 and pts1 == [None] and N2 == 5 and finite == listed and len(deg2) == 2 and order == 5 and assoc
    return ok, f"N1={N1}, N2={N2}, degree-2 points {[z.name for z in deg2]}, ord(x1)={order}, associative={assoc}"


# 8 -------------------------------------------------------------------------


def criterion_8():
    G = orthogonality_matrix(2)
    orth = all(G[i][j] == (5 if i == j else 0) for i in range(5) for j in range(5))
    trips = {v: base_change(v).is_identity() for v in ((0, 2), (2, 0), (2, 2))}
    ok = orth and all(trips.values())
    return ok, f"orthogonality={orth}, round trips={trips}"


# 9 -------------------------------------------------------------------------


def criterion_9():
    B = assemble_bracket()
    rep = multiplicity_extraction(B)
    ok = B.is_zeta_free() and B.support_matches()
    got = sorted(s.render() for s in B.support())
    mism = [
        f"{row['symbol']}: computed {row['computed']} vs printed {row['printed']}"
        for cmp in B.comparisons[1:2] for row in cmp["rows"] if not row["agree"]
    ]
    rec = rep.to_record()
    detail = (
        f"zeta-free={B.is_zeta_free()}, support={got}; coefficient mismatches: {mism}; "
        f"sum {rec['computed_sum']} (printed {rec['printed_sum']}) vs {rec['expected_sum']}"
    )
    return ok, detail


CRITERIA = [
    (1, "degree-5 concrete tables over F_2 and F_3", criterion_1),
    (2, "degree-5 multiplicity polynomials", criterion_2),
    (3, "sum rule", criterion_3),
    (4, "degree-1 graph pattern", criterion_4),
    (5, "operator commutativity", criterion_5),
    (6, "elementary-transformation laws", criterion_6),
    (7, "elliptic curve data", criterion_7),
    (8, "character machinery", criterion_8),
    (9, "elliptic bracket support and zeta-freeness", criterion_9),
]

TIME_BUDGET = 300.0


def run_criterion(number) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # an exception is a failure, reported as such
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(n, title, bool(ok), detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all(numbers=None, report=None):
    """Run criteria 1-9 and then 10 (the total time budget)."""
    numbers = [n for n, _, _ in CRITERIA] if numbers is None else numbers
    results = []
    t0 = time.perf_counter()
    for n in numbers:
        res = run_criterion(n)
        results.append(res)
        if report:
            report(res)
    total = time.perf_counter() - t0
    if len(numbers) == len(CRITERIA):
        res = CriterionResult(
            10, "full suite end to end under 5 minutes", total < TIME_BUDGET, f"total {total:.1f}s", total
        )
        results.append(res)
        if report:
            report(res)
    return results
