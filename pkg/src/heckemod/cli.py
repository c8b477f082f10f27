"""Command-line front end.

Exit codes: 0 success, 1 selftest failure, 2 invalid input, 3 enumeration
cap exceeded, 4 internal invariant violated.  Known discrepancies with
printed values are findings, reported in a "diagnostics" array with exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import InvariantError, ResourceCapError, ValidationError

EXIT_OK, EXIT_SELFTEST, EXIT_VALIDATION, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _ints(text, what):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"{what} must be a comma-separated list of integers, got {text!r}")


def _point(args):
    from .p1.points import point_by_index, point_from_string

    if args.point is not None:
        if args.point_degree is not None:
            raise ValidationError("give either --point or --point-degree, not both")
        return point_from_string(args.q, args.point)
    if args.point_degree is None:
        raise ValidationError("a point is required: --point POLY or --point-degree D [--point-index I]")
    return point_by_index(args.q, args.point_degree, args.point_index)


def _type(args):
    from .p1.splitting import SplittingType

    return SplittingType.parse(args.type)


def _samples(args):
    return None if args.samples is None else _ints(args.samples, "--samples")


# -- subcommands --------------------------------------------------------------


def cmd_modify(args):
    from .p1.oracle import modify_ladder
    from .p1.subspaces import FiberSubspace, subspace_by_index

    E, x = _type(args), _point(args)
    if args.functionals is not None:
        rows = [_ints(r, "--functionals") for r in args.functionals.split(";")]
        W = FiberSubspace(x, E.rank, rows)
        if W.r != args.weight:
            raise ValidationError(f"{W.r} functionals given but --weight is {args.weight}")
    else:
        W = subspace_by_index(x, E.rank, args.weight, args.subspace_index)
    lad = modify_ladder(E, x, W, method=args.method)
    K = x.residue
    rec = {
        "source": E.to_list(),
        "point": x.render(),
        "weight": W.r,
        "functionals": [[K.render(c) for c in row] for row in W.functionals],
        **lad.to_record(),
    }
    if args.format == "table":
        lines = [f"{E} at {x.render()}, W cut out by {rec['functionals']}", f"result {lad.result}"]
        lines += [f"  h0(E'({m})) = {h}" for m, h in sorted(lad.h0.items())]
        return "\n".join(lines) + "\n"
    return _dump(rec)


def cmd_table(args):
    from .p1.oracle import multiplicity_table

    t = multiplicity_table(_type(args), _point(args), args.weight, cap=args.cap)
    if args.format == "table":
        lines = [f"{t.source} at {t.point.render()} over F_{args.q}, weight {t.weight}"]
        lines += [f"  {k}: {v}" for k, v in t.items()]
        lines.append(f"  total: {t.total}")
        return "\n".join(lines) + "\n"
    return _dump(t.to_record())


def cmd_interpolate(args):
    from .hall.polynomials import multiplicity_polynomials, verify_sum_rule

    if args.point_degree is None:
        raise ValidationError("--point-degree is required")
    t = multiplicity_polynomials(_type(args), args.point_degree, args.weight, _samples(args), cap=args.cap)
    rule = verify_sum_rule(t)
    if args.format == "table":
        lines = [f"{t.source}, point degree {t.d}, weight {t.r}, samples {t.samples}"]
        lines += [f"  {k}: {p.render('q')}" for k, p in t.items()]
        lines.append(f"  total: {rule.lhs.render('q')} (expected {rule.rhs.render('q')})")
        return "\n".join(lines) + "\n"
    return _dump({**t.to_record(), "sum_rule": rule.to_record()})


def _graph(args):
    from .graphs import build_graph

    if args.point_degree is None:
        raise ValidationError("--point-degree is required")
    return build_graph(args.point_degree, args.weight, args.window, _samples(args))


def cmd_graph(args):
    G = _graph(args)
    if args.format == "dot":
        return G.to_dot()
    if args.format == "table":
        lines = [repr(G)]
        for n, m, p in G.edge_list():
            lines.append(f"  {n} -> {m}: {p.render('q')}")
        return "\n".join(lines) + "\n"
    return G.to_json() + "\n"


def cmd_apply(args):
    from .graphs import VertexFunction, apply_operator

    G = _graph(args)
    if args.delta is not None:
        f = VertexFunction.delta(args.delta, G.N)
    elif args.function is not None:
        vals = [Fraction(t) for t in args.function.split(",")]
        f = VertexFunction(vals)
    else:
        raise ValidationError("give --delta M or --function v0,v1,...")
    out = apply_operator(f, G, args.q)
    rec = {
        "point_degree": G.d,
        "weight": G.r,
        "window": G.N,
        "q": args.q,
        "values": [{"vertex": n, "value": str(v)} for n, v in sorted(out.items())],
    }
    if args.format == "table":
        return "\n".join(f"  ({n}) {v}" for n, v in sorted(out.items())) + "\n"
    return _dump(rec)


def cmd_commute(args):
    from .graphs import commutativity_check

    rep = commutativity_check(args.d1, args.d2, args.weight, args.window, args.q, _samples(args))
    rec = {"d1": args.d1, "d2": args.d2, "weight": args.weight, "window": args.window, "q": args.q,
           **rep.to_record()}
    if args.format == "table":
        return f"commute: {rep.ok} on vertices {rep.region}, max deviation {rep.max_deviation()}\n"
    return _dump(rec)


def elliptic_transcript():
    from .elliptic.bracket import (
        EXPECTED_SUPPORT,
        assemble_bracket,
        evaluate_multiplicities,
        multiplicity_extraction,
    )
    from .elliptic.characters import (
        PicardGroup,
        base_change,
        character_table,
        isolation_weights,
        orthogonality_matrix,
    )
    from .elliptic.curve import closed_points_elliptic, count_points, point_record

    points = {}
    for n in (1, 2):
        N, pts = count_points(n)
        points[str(n)] = {"count": N, "points": [point_record(P) for P in pts]}
    G = PicardGroup(2)
    chars = character_table(2)
    orth = orthogonality_matrix(2)
    B = assemble_bracket()
    ext = multiplicity_extraction(B)
    ext_rec = ext.to_record()

    diagnostics = []
    if not B.support_matches():
        extra = sorted(s.render() for s in B.support() - EXPECTED_SUPPORT)
        diagnostics.append({"check": "support", "status": "mismatch", "extra_classes": extra})
    for cmp in B.comparisons:
        if not cmp["all_agree"]:
            diagnostics.append({
                "check": f"coefficients: {cmp['stage']}",
                "status": "mismatch",
                "symbols": [r["symbol"] for r in cmp["rows"] if not r["agree"]],
            })
    if not ext_rec["computed_sum_matches"]:
        diagnostics.append({"check": "sum rule (computed)", "status": "mismatch",
                            "sum": ext_rec["computed_sum"], "expected": ext_rec["expected_sum"]})
    if not ext_rec["printed_sum_matches"]:
        diagnostics.append({"check": "sum rule (printed)", "status": "mismatch",
                            "sum": ext_rec["printed_sum"], "expected": ext_rec["expected_sum"]})
    iso = isolation_weights("y")
    diagnostics.append({
        "check": "weighting by rho~(y) over all characters",
        "status": "finding",
        "result": {k: v.render() for k, v in iso.items()},
        "note": "isolates T_{(0,2),y} with constant 5/2; T_{(0,2),x} needs the weights rho~(x)",
    })
    return {
        "curve": "y^2 + y = x^3 + x + 1 over F_2",
        "point_tables": points,
        "closed_points": [z.to_record() for z in closed_points_elliptic(2)],
        "group": {
            "generator": point_record(G.generator),
            "order": G.order,
            "discrete_logs": [{"point": point_record(P), "log": G.discrete_log(P)} for P in G.points],
            "table": G.group_table(),
        },
        "characters": [c.to_record() for c in chars],
        "orthogonality": [[c.to_record(order=5) for c in row] for row in orth],
        "base_change": {str(list(v)): base_change(v).to_record() for v in ((0, 2), (2, 0), (2, 2), (1, 1))},
        "bracket": B.to_record(),
        "multiplicities": ext_rec,
        "multiplicities_at_q2": {
            "computed": evaluate_multiplicities(ext.multiplicities, 2),
            "printed": evaluate_multiplicities(ext.printed_multiplicities, 2),
        },
        "diagnostics": diagnostics,
    }


def _elliptic_report(rec):
    lines = [f"curve {rec['curve']}"]
    for n, t in rec["point_tables"].items():
        lines.append(f"  #X(F_{2 ** int(n)}) = {t['count']}")
    lines.append("closed points of degree <= 2: " + ", ".join(z["name"] for z in rec["closed_points"]))
    lines.append("")
    for step in rec["bracket"]["steps"]:
        lines.append(f"[{step['step']}] {step['description']}")
        if isinstance(step["value"], list):
            for t in step["value"]:
                lines.append(f"    {t['coefficient']}  *  {t['symbol']}")
    lines.append("")
    for cmp in rec["bracket"]["comparisons"]:
        lines.append(f"compare {cmp['stage']}:")
        for r in cmp["rows"]:
            mark = "=" if r["agree"] else "!="
            lines.append(f"    {r['symbol']}: {r['computed']} {mark} {r['printed']}")
    lines.append("")
    m = rec["multiplicities"]
    lines.append(f"multiplicities (scaled by {m['scale']}):")
    for row in m["computed"]:
        lines.append(f"    computed {row['class']}: {row['multiplicity']}")
    for row in m["printed"]:
        lines.append(f"    printed  {row['class']}: {row['multiplicity']}")
    lines.append(f"sum: computed {m['computed_sum']}, printed {m['printed_sum']}, expected {m['expected_sum']}")
    lines.append("")
    lines.append("diagnostics:")
    for d in rec["diagnostics"]:
        lines.append(f"    {d['check']}: {d['status']}")
    return "\n".join(lines) + "\n"


def cmd_elliptic(args):
    rec = elliptic_transcript()
    if args.format == "table":
        return _elliptic_report(rec)
    return _dump(rec)


def cmd_selftest(args):
    from .acceptance import run_all

    numbers = None if args.criteria is None else _ints(args.criteria, "--criteria")
    results = run_all(numbers, report=lambda r: print(r.line(), flush=True) if args.format == "table" else None)
    args._selftest_failed = not all(r.passed for r in results)
    if args.format == "table":
        passed = sum(r.passed for r in results)
        return f"{passed}/{len(results)} criteria passed\n"
    return _dump([r.to_record() for r in results])


# -- parser --------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="heckemod", description="Hecke modifications over P^1 and an elliptic curve.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "table")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", "-o", help="write to this file instead of standard output")

    def pointargs(sp):
        sp.add_argument("--q", type=int, default=2, help="size of the base field")
        sp.add_argument("--point", help='monic irreducible polynomial, e.g. "t^5+t^2+1"')
        sp.add_argument("--point-degree", type=int)
        sp.add_argument("--point-index", type=int, default=0, help="index in lexicographic order")

    s = sub.add_parser("modify", help="modify a bundle along one fiber subspace")
    pointargs(s)
    s.add_argument("--type", required=True, help="splitting type, e.g. 0,0")
    s.add_argument("--weight", type=int, default=1)
    s.add_argument("--subspace-index", type=int, default=0)
    s.add_argument("--functionals", help='defining functionals over the base field, rows split by ";"')
    s.add_argument("--method", choices=("fast", "reference"), default="fast")
    common(s)
    s.set_defaults(func=cmd_modify)

    s = sub.add_parser("table", help="multiplicity table over one field")
    pointargs(s)
    s.add_argument("--type", required=True)
    s.add_argument("--weight", type=int, default=1)
    s.add_argument("--cap", type=int, default=10**6)
    common(s)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("interpolate", help="multiplicity polynomials in q")
    s.add_argument("--type", required=True)
    s.add_argument("--point-degree", type=int)
    s.add_argument("--weight", type=int, default=1)
    s.add_argument("--samples", help="comma-separated sample field sizes")
    s.add_argument("--cap", type=int, default=10**6)
    common(s)
    s.set_defaults(func=cmd_interpolate)

    def graphargs(sp):
        sp.add_argument("--point-degree", type=int)
        sp.add_argument("--weight", type=int, default=1)
        sp.add_argument("--window", type=int, default=8)
        sp.add_argument("--samples")

    s = sub.add_parser("graph", help="Hecke graph on classes O+O(n), n <= window")
    graphargs(s)
    common(s, ("json", "dot", "table"))
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("apply", help="apply a Hecke operator to a function on the window")
    graphargs(s)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--delta", type=int)
    s.add_argument("--function", help="values at vertices 0..window, comma-separated")
    common(s)
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("commute", help="check that two Hecke operators commute on the window")
    s.add_argument("--d1", type=int, default=1)
    s.add_argument("--d2", type=int, default=2)
    s.add_argument("--weight", type=int, default=1)
    s.add_argument("--window", type=int, default=12)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--samples")
    common(s)
    s.set_defaults(func=cmd_commute)

    s = sub.add_parser("elliptic", help="transcript of the elliptic-curve bracket")
    common(s)
    s.set_defaults(func=cmd_elliptic)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    common(s, ("table", "json"))
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceCapError as exc:
        print(f"error: {exc} (required {exc.required}, cap {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "_selftest_failed", False):
        return EXIT_SELFTEST
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
