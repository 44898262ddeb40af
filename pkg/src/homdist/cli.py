"""Command-line front end.

Verbs: info, hom, s, d, mc, bounds, sweep, check-metric.  Output is
human-readable text by default; --format json/csv switches to
machine-readable renderings with exact rationals carried as num/den pairs.

Exit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded,
4 property-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, bounds as bounds_mod
from .distance import check_metric_axioms, distance, s_value
from .errors import (DomainError, GraphSpecError, ResourceLimitError,
                     SizeLimitError)
from .graphs import parse_spec, read_edge_list
from .homomorphism import find_homomorphism
from .oracle import WeightFunction, mc
from .symmetry import edge_orbits

GRAMMAR = ("graph specs: K<n>, C<n> (n>=3), P<n>, W<n> (n>=4), K<p>/<q> "
           "(p>=2q), T<n>,<r>, petersen, or @<edge-list-file>")


def _rat(x) -> dict:
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator,
                "decimal": float(x)}
    return {"decimal": float(x)}


def _rat_text(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator} ({float(x):.6g})"
    return f"{float(x):.6g}"


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
        return
    _emit_text(doc)


def _emit_text(doc: dict, indent: int = 0):
    pad = "  " * indent
    for key, value in doc.items():
        if key == "version":
            continue
        if isinstance(value, dict):
            if set(value) <= {"num", "den", "decimal"}:
                if "num" in value:
                    print(f"{pad}{key}: {value['num']}/{value['den']} "
                          f"({value['decimal']:.6g})")
                else:
                    print(f"{pad}{key}: {value['decimal']:.6g}")
            else:
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
        elif isinstance(value, (list, tuple)):
            print(f"{pad}{key}: {list(value)}")
        else:
            print(f"{pad}{key}: {value}")


def _doc(command: str, **fields) -> dict:
    doc = {"command": command}
    doc.update(fields)
    doc["version"] = __version__
    return doc


def cmd_info(args) -> int:
    g = parse_spec(args.graph)
    fields = {
        "graph": args.graph,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "degree_sequence": g.degree_sequence(),
    }
    if g.edge_count > 0:
        orbits = edge_orbits(g, args.vertex_cap)
        fields["orbit_sizes"] = list(orbits.sizes)
        fields["edge_transitive"] = len(orbits.orbits) == 1
    _emit(_doc("info", **fields), args.format)
    return 0


def cmd_hom(args) -> int:
    g = parse_spec(args.source)
    h = parse_spec(args.target)
    witness = find_homomorphism(g, h, args.enum_budget)
    fields = {"source": args.source, "target": args.target,
              "exists": witness is not None}
    if witness is not None:
        fields["witness"] = list(witness.assignment)
    _emit(_doc("hom", **fields), args.format)
    return 0


def _s_fields(spec_m, spec_n, sv) -> dict:
    fields = {"M": spec_m, "N": spec_n, "s": _rat(sv.value),
              "method": sv.method}
    if sv.method == "hom":
        fields["witness_hom_n_to_m"] = list(sv.witness_hom.assignment)
    elif sv.method == "uniform":
        fields["optimal_map"] = list(sv.optimal_map.assignment)
    else:
        fields["orbit_sizes"] = list(sv.program.orbit_sizes)
        fields["lp_vectors"] = [list(v) for v in sv.program.vectors]
        fields["lp_weights"] = [_rat(w) for w in sv.solution.weights]
        fields["tight_vectors"] = list(sv.solution.tight_vectors)
    return fields


def cmd_s(args) -> int:
    m = parse_spec(args.M)
    n = parse_spec(args.N)
    sv = s_value(m, n, args.enum_budget, args.vertex_cap)
    _emit(_doc("s", **_s_fields(args.M, args.N, sv)), args.format)
    return 0


def cmd_d(args) -> int:
    m = parse_spec(args.M)
    n = parse_spec(args.N)
    rep = distance(m, n, args.enum_budget, args.vertex_cap,
                   m_spec=args.M, n_spec=args.N)
    fields = {
        "M": args.M, "N": args.N,
        "d": _rat(rep.d),
        "s_mn": _s_fields(args.M, args.N, rep.s_mn),
        "s_nm": _s_fields(args.N, args.M, rep.s_nm),
        "hom_m_to_n": rep.hom_m_to_n,
        "hom_n_to_m": rep.hom_n_to_m,
    }
    _emit(_doc("d", **fields), args.format)
    return 0


def cmd_mc(args) -> int:
    h = parse_spec(args.H)
    if not args.instance.startswith("@"):
        raise GraphSpecError("instance must be @<edge-list-file>")
    g, weights = read_edge_list(args.instance[1:])
    if weights is None:
        w = WeightFunction.unit(g)
    else:
        w = WeightFunction(g, weights)
    value, witness = mc(h, g, w, args.enum_budget)
    fields = {"H": args.H, "instance": args.instance,
              "total_weight": _rat(w.total()),
              "optimum": _rat(value),
              "witness": list(witness.assignment)}
    _emit(_doc("mc", **fields), args.format)
    return 0


def cmd_bounds(args) -> int:
    h = parse_spec(args.H)
    c = Fraction(args.c)
    fields: dict = {"H": args.H, "c": str(c)}
    want_hastad = args.hastad or args.compare
    want_transfer = args.via is not None or args.fj is not None or args.compare

    if not (want_hastad or want_transfer):
        raise GraphSpecError("choose --via M, --fj K, --hastad or --compare")

    if want_transfer:
        k = args.fj if args.fj is not None else 2
        via_spec = args.via if args.via is not None else f"K{k}"
        m = parse_spec(via_spec)
        algorithm = "GW" if k == 2 else "FJ"
        rep = bounds_mod.transfer_guarantee(
            algorithm, m, h, k=k, budget=args.enum_budget,
            m_spec=via_spec, n_spec=args.H)
        fields["transfer"] = {
            "algorithm": rep.algorithm,
            "via": rep.via,
            "lower_bound": {"decimal": rep.lower_bound},
            "exact_factor": _rat(rep.exact_factor),
            "flags": list(rep.flags),
        }
    if want_hastad:
        value = bounds_mod.hastad_bound(h, c)
        fields["hastad"] = _rat(value)
    if args.beta is not None:
        if args.hardness_via is None:
            raise GraphSpecError("--beta needs --hardness-via K")
        kk = parse_spec(args.hardness_via)
        rep = bounds_mod.inapprox_transfer(
            Fraction(args.beta), h, kk, budget=args.enum_budget,
            n_spec=args.H, k_spec=args.hardness_via)
        fields["conditional_upper_bound"] = {
            "decimal": rep.upper_bound,
            "flags": list(rep.flags),
        }
    _emit(_doc("bounds", **fields), args.format)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_sweep(args) -> int:
    lo, hi = _parse_range(args.range)
    rows = bounds_mod.family_sweep(args.family, lo, hi, Fraction(args.c),
                                   r=args.r)
    if args.format == "csv":
        print("family,param,fj_algorithm,fj,fj_exact_factor,hastad,flags")
        for row in rows:
            param = ";".join(map(str, row.param))
            print(f"{row.family},{param},{row.fj_label},{row.fj!r},"
                  f"{row.fj_exact_factor},{float(row.hastad)!r},"
                  f"{';'.join(row.fj_flags)}")
        return 0
    doc_rows = [{
        "param": list(row.param),
        "fj_algorithm": row.fj_label,
        "fj": {"decimal": row.fj},
        "fj_exact_factor": _rat(row.fj_exact_factor),
        "hastad": _rat(row.hastad),
        "flags": list(row.fj_flags),
    } for row in rows]
    if args.format == "json":
        _emit(_doc("sweep", family=args.family, c=str(Fraction(args.c)),
                   rows=doc_rows), "json")
        return 0
    print(f"family={args.family} c={Fraction(args.c)}")
    print(f"{'param':>10} {'alg':>5} {'FJ':>12} {'factor':>12} {'Hastad':>16}")
    for row in rows:
        param = ",".join(map(str, row.param))
        print(f"{param:>10} {row.fj_label:>5} {row.fj:>12.6f} "
              f"{str(row.fj_exact_factor):>12} {_rat_text(row.hastad):>16}")
    return 0


def cmd_check_metric(args) -> int:
    if len(args.graphs) < 2:
        raise GraphSpecError("check-metric needs at least 2 graphs")
    pool = [parse_spec(s) for s in args.graphs]
    report = check_metric_axioms(pool, args.enum_budget, args.vertex_cap,
                                 labels=list(args.graphs))
    fields = {
        "pool": list(args.graphs),
        "axioms": {k: ("pass" if v else "FAIL")
                   for k, v in sorted(report.axioms.items())},
        "violations": report.violations,
        "passed": report.passed,
    }
    _emit(_doc("check-metric", **fields), args.format)
    return 0 if report.passed else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homdist",
        description="Exact homomorphism-distance computations for Max H-Col "
                    "approximability. " + GRAMMAR,
    )
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    parser.add_argument("--vertex-cap", type=int, default=None,
                        help="max vertices for symmetry computations "
                             "(default 12, env HOMDIST_VERTEX_CAP)")
    parser.add_argument("--enum-budget", type=int, default=None,
                        help="max vertex maps per brute-force scan "
                             "(default 10^8, env HOMDIST_ENUM_BUDGET)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="graph facts and edge orbits")
    p.add_argument("graph")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("hom", help="search for a homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("s", help="exact s(M,N) with certificate")
    p.add_argument("M")
    p.add_argument("N")
    p.set_defaults(func=cmd_s)

    p = sub.add_parser("d", help="exact distance d(M,N)")
    p.add_argument("M")
    p.add_argument("N")
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("mc", help="brute-force Max H-Col optimum")
    p.add_argument("H")
    p.add_argument("instance", help="@<edge-list-file>, optional weights")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("bounds", help="approximation guarantees for a graph")
    p.add_argument("H")
    p.add_argument("--via", default=None,
                   help="transfer the base algorithm for this graph")
    p.add_argument("--fj", type=int, default=None,
                   help="use the Max k-cut guarantee with this k")
    p.add_argument("--hastad", action="store_true")
    p.add_argument("--compare", action="store_true",
                   help="report both the transfer and the Hastad bound")
    p.add_argument("--c", default="0", help="Hastad's absolute constant")
    p.add_argument("--beta", default=None,
                   help="hardness threshold to transfer (conditional)")
    p.add_argument("--hardness-via", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="FJ vs Hastad over a graph family")
    p.add_argument("family", choices=("cycles", "wheels", "complete", "turan"))
    p.add_argument("range", help="lo..hi")
    p.add_argument("--c", default="0")
    p.add_argument("--r", type=int, default=2, help="part count for turan")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check-metric", help="verify the metric axioms")
    p.add_argument("graphs", nargs="+")
    p.set_defaults(func=cmd_check_metric)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphSpecError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, SizeLimitError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
