"""Command line interface: ``jetgraph <command> [options] [input]``.

Graph input comes from a file argument or stdin. Exit codes: 0 success,
1 verification failure, 2 usage error, 3 resource limit / skipped cells.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import NotEquigenerated, betti_table, has_linear_resolution
from .corpus import Corpus
from .graph import (
    CapExceeded,
    Graph,
    GraphFormatError,
    complement,
    edge_ideal,
    format_graph,
    is_chordal,
    minimal_vertex_covers,
    parse_graph,
)
from .groebner import Limits, ResourceLimit, format_ideal, parse_ideal, to_macaulay2
from .jets import (
    SmoothVariety,
    jets_of_edge_ideal,
    jets_of_graph,
    jets_of_ideal,
    pc_as_cover_intersection,
    principal_component_ideal,
    principal_component_via_saturation,
    radical_of_jets,
    singular_locus_ideal,
)
from .monomial import MonomialIdeal, NotSquarefree
from .poly import format_polynomial
from .verify import SUITES, exit_code, run_suite, summarize


class UsageError(Exception):
    pass


def _read_input(args) -> str:
    if args.input and args.input != "-":
        return Path(args.input).read_text()
    return sys.stdin.read()


def _graph(args) -> Graph:
    return parse_graph(_read_input(args))


def _limits(args) -> Limits:
    if not args.limits:
        return Limits()
    return Limits.from_mapping(json.loads(Path(args.limits).read_text()))


def _emit_ideal(args, ideal) -> str:
    if isinstance(ideal, MonomialIdeal):
        ring, gens = ideal.ring, ideal.polynomials()
    else:
        ring, gens = ideal.ring, list(ideal.generators)
    if args.format == "structured":
        return json.dumps({"ring": list(ring.names), "generators": [format_polynomial(g) for g in gens]}) + "\n"
    return format_ideal(ring, gens)


def _emit_graph(args, g: Graph) -> str:
    if args.format == "structured":
        return format_graph(g)
    lines = [f"{a} {b}" for a, b in g.edge_names()]
    isolated = [v for i, v in enumerate(g.vertices) if not g.adjacency[i]]
    return "\n".join(lines + isolated) + "\n"


# ----------------------------------------------------------------- commands


def cmd_covers(args) -> str:
    g = _graph(args)
    covers = minimal_vertex_covers(g)
    if args.format == "structured":
        return json.dumps({"covers": [w.names() for w in covers]}) + "\n"
    return "".join(" ".join(w.names()) + "\n" for w in covers)


def cmd_jets_graph(args) -> str:
    return _emit_graph(args, jets_of_graph(_graph(args), args.s))


def cmd_complement(args) -> str:
    return _emit_graph(args, complement(_graph(args)))


def cmd_chordal(args) -> str:
    g = _graph(args)
    ok, cycle = is_chordal(g)
    if args.format == "structured":
        return json.dumps({"chordal": ok, "witness": cycle.names(g) if cycle else None}) + "\n"
    if ok:
        return "chordal\n"
    return "not chordal; chordless cycle: " + " ".join(cycle.names(g)) + "\n"


def cmd_edge_ideal(args) -> str:
    return _emit_ideal(args, edge_ideal(_graph(args)))


def cmd_jets_ideal(args) -> str:
    if args.ideal:
        return _emit_ideal(args, jets_of_ideal(parse_ideal(Path(args.ideal).read_text()), args.s))
    return _emit_ideal(args, jets_of_edge_ideal(_graph(args), args.s))


def _monomial_input(args) -> MonomialIdeal:
    if args.ideal:
        ideal = parse_ideal(Path(args.ideal).read_text())
        if not all(g.is_monomial() for g in ideal.generators):
            raise UsageError("expected a monomial ideal")
        return MonomialIdeal.from_monomials(ideal.ring, [g.monomials()[0] for g in ideal.generators])
    return edge_ideal(_graph(args))


def cmd_jets_radical(args) -> str:
    return _emit_ideal(args, radical_of_jets(_monomial_input(args), args.s))


def cmd_pc(args) -> str:
    g = _graph(args)
    if args.route == "closed-form":
        ideal = principal_component_ideal(g, args.s)
    elif args.route == "intersection":
        ideal = pc_as_cover_intersection(g, args.s)
    else:
        ideal = principal_component_via_saturation(g, args.s, _limits(args))
    return _emit_ideal(args, ideal)


def cmd_singular_locus(args) -> str:
    return _emit_ideal(args, singular_locus_ideal(_graph(args), args.s))


def _betti_ideal(args) -> MonomialIdeal:
    if args.pc:
        return principal_component_ideal(_graph(args), args.s)
    if args.s and not args.ideal:
        raise UsageError("-s with betti needs --pc (jets ideals are not monomial)")
    return _monomial_input(args)


def cmd_betti(args) -> str:
    table = betti_table(_betti_ideal(args), quotient=args.quotient)
    if args.format == "structured":
        return json.dumps(table.to_structured()) + "\n"
    return table.format()


def cmd_linear_res(args) -> str:
    linear = has_linear_resolution(_betti_ideal(args))
    if args.format == "structured":
        return json.dumps({"linear_resolution": linear}) + "\n"
    return ("linear\n" if linear else "not linear\n")


def cmd_export_m2(args) -> str:
    g = _graph(args)
    what = args.what
    if what == "edge":
        ideal = edge_ideal(g)
    elif what == "jets":
        ideal = jets_of_edge_ideal(g, args.s)
    elif what == "radical":
        ideal = radical_of_jets(edge_ideal(g), args.s)
    else:
        ideal = principal_component_ideal(g, args.s)
    gens = ideal.polynomials() if isinstance(ideal, MonomialIdeal) else list(ideal.generators)
    return to_macaulay2(ideal.ring, gens)


COMMANDS = {
    "covers": cmd_covers,
    "jets-graph": cmd_jets_graph,
    "complement": cmd_complement,
    "chordal": cmd_chordal,
    "edge-ideal": cmd_edge_ideal,
    "jets-ideal": cmd_jets_ideal,
    "jets-radical": cmd_jets_radical,
    "pc": cmd_pc,
    "singular-locus": cmd_singular_locus,
    "betti": cmd_betti,
    "linear-res": cmd_linear_res,
    "export-m2": cmd_export_m2,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-s", type=int, default=0, help="jet order")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--limits", help="JSON file with Groebner resource limits")
    common.add_argument("--seed", type=int, default=0, help="seed for random corpora")

    parser = argparse.ArgumentParser(prog="jetgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", help="graph file (default: stdin)")
        if name in ("jets-ideal", "jets-radical", "betti", "linear-res"):
            p.add_argument("--ideal", help="ideal file instead of a graph")
        if name == "pc":
            p.add_argument("--route", choices=("closed-form", "intersection", "saturation"),
                           default="closed-form")
        if name in ("betti", "linear-res"):
            p.add_argument("--pc", action="store_true", help="use the principal component ideal")
        if name == "betti":
            p.add_argument("--quotient", action=argparse.BooleanOptionalAction, default=True,
                           help="Betti numbers of S/I (default) or of I")
        if name == "export-m2":
            p.add_argument("--what", choices=("edge", "jets", "radical", "pc"), default="jets")

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--corpus", default="family:path:3;cycle:3;star:3;cycle:5;path:4")
    v.add_argument("--s-values", default="0,1,2")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--report", help="write all reports as JSON to this file")
    return parser


def cmd_verify(args) -> int:
    s_values = [int(x) for x in args.s_values.split(",") if x]
    corpus = Corpus.parse(args.corpus, seed=args.seed)
    reports = run_suite(args.suite, corpus, s_values, _limits(args), args.workers)
    counts = summarize(reports)
    if args.report:
        Path(args.report).write_text(json.dumps([r.to_structured() for r in reports], indent=1))
    if args.format == "structured":
        sys.stdout.write(json.dumps({"summary": counts, "reports": [r.to_structured() for r in reports]}) + "\n")
    else:
        for r in reports:
            if r.status != "pass":
                sys.stdout.write(f"{r.status}: {r.instance['label']} s={r.instance['s']} {r.detail}\n")
                if r.witness:
                    sys.stdout.write("  witness: " + json.dumps(r.witness) + "\n")
        sys.stdout.write(
            f"{args.suite}: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped\n"
        )
    return exit_code(reports)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        sys.stdout.write(COMMANDS[args.command](args))
        return 0
    except (UsageError, GraphFormatError, NotSquarefree, NotEquigenerated, SmoothVariety, ValueError) as exc:
        sys.stderr.write(f"jetgraph: error: {exc}\n")
        return 2
    except (ResourceLimit, CapExceeded) as exc:
        sys.stderr.write(f"jetgraph: resource limit: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
