"""Command-line interface.

Reports go to stdout as JSON, human summaries to stderr. Exit codes: 0 on
success, 1 when a check finds a failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import io
from .digraph import (
    complete_closure_reg,
    complete_graph_reg,
    edge_ideal,
    is_type_one,
)
from .exceptions import MonoregError
from .io import fraction_str
from .monomial import format_monomial
from .newton import integral_closure, np_membership
from .regularity import degree_complex, regularity, regularity_oracle_koszul
from .simplicial import link, reduced_homology_dims
from .verify import SUITES, cmd_golden, cmd_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_reg(args) -> int:
    ideal = io.load_ideal(args.ideal)
    report = regularity(ideal, args.char)
    out = report.to_json()
    status = EXIT_OK
    if args.witness:
        w = report.witness
        cx = degree_complex(ideal, w.a)
        out["witness"]["degree_complex"] = cx.to_json()["facets"]
        out["witness"]["link_homology"] = reduced_homology_dims(link(cx, w.face), args.char).to_json()["dims"]
    if args.oracle:
        oracle = regularity_oracle_koszul(ideal, args.char)
        out["oracle"] = oracle.to_json()
        out["agree"] = oracle.reg_ideal == report.reg_ideal
        if not out["agree"]:
            status = EXIT_FAIL
    _emit(out)
    _say(f"reg(I) = {report.reg_ideal} over {report.field}")
    return status


def cmd_closure(args) -> int:
    closure = integral_closure(io.load_ideal(args.ideal))
    if args.json:
        _emit(io.ideal_to_json(closure))
    else:
        print(closure)
    return EXIT_OK


def cmd_member(args) -> int:
    ideal = io.load_ideal(args.ideal)
    a = io.parse_exponent(args.exp, ideal.n)
    res = np_membership(ideal, a)
    out = {"exponent": list(a), "member": res.member}
    if res.certificate is not None:
        out["certificate"] = [
            {"index": i, "generator": format_monomial(ideal.gens[i]), "coefficient": fraction_str(c)}
            for i, c in sorted(res.certificate.coefficients.items())
        ]
    if res.separator is not None:
        out["separator"] = [fraction_str(y) for y in res.separator.weights]
    _emit(out)
    return EXIT_OK


def cmd_degree_complex(args) -> int:
    ideal = io.load_ideal(args.ideal)
    a = io.parse_exponent(args.exp, ideal.n)
    cx = degree_complex(ideal, a)
    out = cx.to_json()
    out["radical_colon"] = str(ideal.colon(a).radical())
    out["homology"] = reduced_homology_dims(cx, args.char).to_json()
    _emit(out)
    return EXIT_OK


def cmd_homology(args) -> int:
    cx = io.parse_complex(io.read_argument(args.complex))
    _emit(reduced_homology_dims(cx, args.char).to_json())
    return EXIT_OK


def cmd_edge_ideal(args) -> int:
    ideal = edge_ideal(io.load_graph(args.graph, args.normalize_sources))
    if args.json:
        _emit(io.ideal_to_json(ideal))
    else:
        print(ideal)
    return EXIT_OK


def cmd_graph_reg(args) -> int:
    graph = io.load_graph(args.graph, args.normalize_sources)
    ideal = edge_ideal(graph)
    out = {"ideal": str(ideal), "reg": regularity(ideal, args.char).to_json()}
    if args.closure:
        closure = integral_closure(ideal)
        out["closure"] = str(closure)
        out["reg_closure"] = regularity(closure, args.char).to_json()
    if graph.is_complete() and len(graph.vertices) >= 2:
        out["complete"] = {
            "type_one": is_type_one(graph),
            "formula_reg": complete_graph_reg(graph),
            "formula_closure_reg": complete_closure_reg(graph),
        }
    _emit(out)
    return EXIT_OK


def _report_run(run, out_path) -> int:
    data = run.to_json()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
    _emit(data)
    _say(f"{run.suite}: {run.count} instances, {len(run.failures)} failures")
    return EXIT_OK if run.passed else EXIT_FAIL


def cmd_verify_args(args) -> int:
    run = cmd_verify(
        args.suite,
        seed=args.seed,
        workers=args.workers,
        allow_large=args.allow_large,
        n=args.n,
        wmax=args.wmax,
        rho=args.rho,
        gens=args.gens,
        count=args.count,
        closure_count=args.closure_count,
        exhaustive=args.exhaustive or None,
        char=args.char,
    )
    return _report_run(run, args.out)


def cmd_golden_args(args) -> int:
    return _report_run(cmd_golden(), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoreg", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_arg(p):
        p.add_argument("--ideal", required=True, help="file or inline text/JSON")

    def char_arg(p):
        p.add_argument("--char", type=int, default=0, help="field characteristic (0 = rationals)")

    def graph_arg(p):
        p.add_argument("--graph", required=True, help="graph JSON file or inline JSON")
        p.add_argument("--normalize-sources", action="store_true", help="reset weighted sources to 1")

    p = sub.add_parser("reg", help="regularity of a monomial ideal")
    ideal_arg(p)
    char_arg(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the Betti-number oracle")
    p.add_argument("--witness", action="store_true", help="include the witness degree complex and link homology")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("closure", help="integral closure")
    ideal_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("member", help="Newton polyhedron membership with an exact certificate")
    ideal_arg(p)
    p.add_argument("--exp", required=True, help="exponent, e.g. 5,1,1")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("degree-complex", help="degree complex of an ideal at an exponent")
    ideal_arg(p)
    char_arg(p)
    p.add_argument("--exp", required=True)
    p.set_defaults(func=cmd_degree_complex)

    p = sub.add_parser("homology", help="reduced homology of a complex")
    p.add_argument("--complex", required=True, help='facets JSON, e.g. {"n":3,"facets":[[1,2],[2,3]]}')
    char_arg(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("edge-ideal", help="edge ideal of a weighted oriented graph")
    graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_edge_ideal)

    p = sub.add_parser("graph-reg", help="regularity of a graph's edge ideal (and its closure)")
    graph_arg(p)
    char_arg(p)
    p.add_argument("--closure", action="store_true")
    p.set_defaults(func=cmd_graph_reg)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--wmax", type=int)
    p.add_argument("--rho", type=int)
    p.add_argument("--gens", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--closure-count", type=int)
    p.add_argument("--seed", type=int, help="defaults to $MC_SEED or 7")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--char", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help="lift the n <= 8, weight <= 6 caps")
    p.add_argument("--out", help="also write the report to this file")
    p.set_defaults(func=cmd_verify_args)

    p = sub.add_parser("golden", help="replay the worked examples")
    p.add_argument("--out")
    p.set_defaults(func=cmd_golden_args)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except MonoregError as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
