"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` reports failing claims, 2 on
usage or input errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .census import (
    CSV_HEADER, CensusRow, classes_to_json, default_threads, rows_to_csv, uniqueness_classes, THREADS_ENV,
)
from .errors import TarError
from .families import build_family
from .graph import Graph, format_set, parse_edge_list, parse_graph6, write_graph6
from .hamilton import DEFAULT_BUDGET, hamilton_search
from .params import KIND_NAMES, ParameterKind
from .tar import SetGraph, build_tar, build_tj, connectivity_profile, degree_stats, setsystem_relabeling, tar_isomorphic
from .verify import verify_paper_suite


class UsageError(Exception):
    pass


class _GraphSource(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, "graphs", None) or [])
        items.append((self.const, values))
        namespace.graphs = items


def _add_sources(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph source (repeat for commands taking two graphs)")
    g.add_argument("--family", action=_GraphSource, const="family", metavar="SPEC",
                   help="family spec such as complete_bipartite:4,5 or k2q:4,(complete:3)")
    g.add_argument("--graph6", action=_GraphSource, const="graph6", metavar="TEXT", help="graph6 record")
    g.add_argument("--file", action=_GraphSource, const="file", metavar="PATH",
                   help="file holding one graph6 record ('-' reads stdin)")
    g.add_argument("--edges", action=_GraphSource, const="edges", metavar="PATH",
                   help="edge-list file, one 'u v' pair per line")


def _load_graph(tag: str, value: str) -> Graph:
    if tag == "family":
        return build_family(value)
    if tag == "graph6":
        return parse_graph6(value)
    if tag == "file":
        text = sys.stdin.read() if value == "-" else Path(value).read_text()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError(f"--file {value}: expected exactly one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(Path(value).read_text())


def _graphs(args, count: int) -> list[Graph]:
    found = getattr(args, "graphs", None) or []
    if len(found) != count:
        raise UsageError(f"{args.command} needs exactly {count} graph source(s), got {len(found)}")
    try:
        return [_load_graph(tag, value) for tag, value in found]
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _kind(args) -> ParameterKind:
    return ParameterKind.from_name(args.kind)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _sets(sets: Sequence[int]) -> list[str]:
    return [format_set(s) for s in sets]


def _set_graph_json(sg: SetGraph) -> dict:
    return {
        "vertices": _sets(sg.sets),
        "edges": [[i, j] for i in range(sg.order) for j in range(i + 1, sg.order) if sg.adj[i] >> j & 1],
    }


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_param(args) -> int:
    (g,) = _graphs(args, 1)
    kind = _kind(args)
    tar = build_tar(kind, g)
    upper = "upper" if kind.is_x else "lower"
    label = "minimal" if kind.is_x else "maximal"
    sets = _sets(tar.extremal)
    if args.format == "json":
        doc = {"kind": kind.cli_name, "graph6": write_graph6(g), "value": tar.values.value,
               upper: tar.values.extremal, f"{label}_sets": sets}
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["kind", "graph6", "value", upper, f"{label}_sets"],
                     [kind.cli_name, write_graph6(g), tar.values.value, tar.values.extremal, " ".join(sets)]])
    else:
        text = (f"kind: {kind.cli_name} ({kind.label})\nvalue: {tar.values.value}\n"
                f"{upper}: {tar.values.extremal}\n{label} sets: {', '.join(sets)}\n")
    _emit(text, args.output)
    return 0


def cmd_tar(args) -> int:
    (g,) = _graphs(args, 1)
    kind = _kind(args)
    tar = build_tar(kind, g)
    sg = tar.set_graph
    if args.format == "dot":
        text = sg.to_dot()
    elif args.format == "graph6":
        text = sg.to_graph6() + "\n" if sg.order <= 32 else sg.edge_list()
    elif args.format == "json":
        doc = {"kind": kind.cli_name, "graph6": write_graph6(g), "order": sg.order,
               "edges_count": sg.edge_count(), **_set_graph_json(sg)}
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["index", "set", "degree"]] + [[i, format_set(s), d] for i, (s, d) in
                                                     enumerate(zip(sg.sets, sg.degrees()))])
    else:
        stats = degree_stats(tar)
        text = (f"kind: {kind.cli_name}\nbase order: {g.n}\nTAR vertices: {sg.order}\nTAR edges: {sg.edge_count()}\n"
                f"max degree: {stats.max_degree}\nmin degree: {stats.min_degree}\nsets: {' '.join(_sets(sg.sets))}\n")
    _emit(text, args.output)
    return 0


def cmd_connect(args) -> int:
    (g,) = _graphs(args, 1)
    kind = _kind(args)
    tar = build_tar(kind, g)
    prof = connectivity_profile(tar)
    x = kind.is_x
    names = ("x0", "lower_x0") if x else ("y0", "upper_y0")
    if args.format == "json":
        doc = {"kind": kind.cli_name, "direction": prof.direction, "value": tar.values.value,
               ("upper" if x else "lower"): tar.values.extremal, names[0]: prof.threshold,
               names[1]: prof.first, "connected": list(prof.connected)}
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["kind", "value", "extremal", names[0], names[1]],
                     [kind.cli_name, tar.values.value, tar.values.extremal, prof.threshold, prof.first]])
    else:
        flags = " ".join(f"{k}:{'Y' if c else 'n'}" for k, c in enumerate(prof.connected))
        text = (f"kind: {kind.cli_name}\nvalue: {tar.values.value}\n"
                f"{'upper' if x else 'lower'}: {tar.values.extremal}\n"
                f"{names[1]}: {prof.first}\n{names[0]}: {prof.threshold}\nslices: {flags}\n")
    _emit(text, args.output)
    return 0


def cmd_tj(args) -> int:
    (g,) = _graphs(args, 1)
    kind = _kind(args)
    if not 0 <= args.k <= g.n:
        raise UsageError(f"--k {args.k} outside 0..{g.n}")
    sg = build_tj(kind, g, args.k)
    if args.format == "dot":
        text = sg.to_dot("TJ")
    elif args.format == "json":
        doc = {"kind": kind.cli_name, "k": args.k, "components": len(sg.components()), **_set_graph_json(sg)}
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["index", "set", "component"]] + [[i, format_set(sg.sets[i]), c]
                                                       for c, comp in enumerate(sg.components()) for i in comp])
    else:
        comps = sg.components()
        text = f"kind: {kind.cli_name}\nk: {args.k}\nvertices: {sg.order}\nedges: {sg.edge_count()}\n"
        text += f"components: {len(comps)}\n"
        for comp in comps:
            text += "  " + " ".join(format_set(sg.sets[i]) for i in comp) + "\n"
    _emit(text, args.output)
    return 0


def cmd_hamilton(args) -> int:
    (g,) = _graphs(args, 1)
    kind = _kind(args)
    tar = build_tar(kind, g)
    res = hamilton_search(tar, args.mode, args.budget)
    witness = [format_set(tar.sets[i]) for i in res.witness] if res.witness else None
    if args.format == "json":
        text = json.dumps({"kind": kind.cli_name, "mode": args.mode, "verdict": res.verdict,
                           "nodes": res.nodes, "witness": witness}, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["kind", "mode", "verdict", "nodes"], [kind.cli_name, args.mode, res.verdict, res.nodes]])
    else:
        text = f"Hamilton {args.mode}: {res.verdict} ({res.nodes} nodes)\n"
        if witness:
            text += "witness: " + " ".join(witness) + "\n"
    _emit(text, args.output)
    return 0


def cmd_iso(args) -> int:
    g, h = _graphs(args, 2)
    kind = _kind(args)
    result = tar_isomorphic(kind, g, h, args.method)
    relabel = None
    if result and args.method != "direct" and g.n == h.n:
        try:
            relabel = setsystem_relabeling(kind, g, h)
        except TarError:
            relabel = None
    if args.format == "json":
        text = json.dumps({"kind": kind.cli_name, "isomorphic": result, "relabeling": relabel}, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["kind", "isomorphic"], [kind.cli_name, str(result).lower()]])
    else:
        text = f"TAR graphs isomorphic: {'yes' if result else 'no'}\n"
        if relabel is not None:
            text += "base relabeling: " + " ".join(f"{v}->{w}" for v, w in enumerate(relabel)) + "\n"
    _emit(text, args.output)
    return 0


def cmd_census(args) -> int:
    kind = _kind(args)
    source = None
    if args.source == "-":
        source = sys.stdin.read()
    elif args.source:
        if not Path(args.source).exists():
            raise UsageError(f"--source {args.source}: no such file")
        source = args.source
    threads = args.threads if args.threads is not None else default_threads()
    classes = uniqueness_classes(kind, args.order, source, args.widen, args.method, threads)
    universe = sum(len(c) for c in classes)
    unique = sum(1 for c in classes if len(c) == 1)
    row = CensusRow(kind, args.order, universe, unique)
    if args.classes_out:
        Path(args.classes_out).write_text(classes_to_json(kind, args.order, classes) + "\n")
    if args.format == "csv":
        text = rows_to_csv([row], header=args.header)
    elif args.format == "json":
        text = json.dumps(dict(zip(CSV_HEADER, [kind.cli_name, args.order, universe, unique, round(row.ratio, 4)])),
                          indent=1) + "\n"
    else:
        text = (f"kind: {kind.cli_name}\norder: {args.order}\nuniverse: {universe}\nunique: {unique}\n"
                f"ratio: {row.ratio:.4f}\nclasses: {len(classes)}\n")
    _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    selection = args.claims or ("quick" if args.quick else "all")
    try:
        report = verify_paper_suite(selection)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    text = report.to_json() + "\n" if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return 0 if report.ok() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tarrecon", description="TAR reconfiguration graphs of graph parameters")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str], kind: bool = True, sources: bool = True):
        if kind:
            p.add_argument("--kind", required=True, choices=KIND_NAMES, help="parameter kind")
        if sources:
            _add_sources(p)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", "-o", metavar="PATH", help="write results here instead of stdout")

    p = sub.add_parser("param", help="parameter value and extremal sets")
    common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("tar", help="build and export the TAR graph")
    common(p, ("text", "json", "csv", "dot", "graph6"))
    p.set_defaults(func=cmd_tar)

    p = sub.add_parser("connect", help="slice connectivity profile")
    common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("tj", help="token-jumping graph on sets of one size")
    common(p, ("text", "json", "csv", "dot"))
    p.add_argument("--k", type=int, required=True, help="set size")
    p.set_defaults(func=cmd_tj)

    p = sub.add_parser("hamilton", help="Hamilton path or cycle in the TAR graph")
    common(p, ("text", "json", "csv"))
    p.add_argument("--mode", choices=("path", "cycle"), default="path")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("iso", help="compare the TAR graphs of two base graphs")
    common(p, ("text", "json", "csv"))
    p.add_argument("--method", choices=("setsystem", "direct"), default=None)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("census", help="uniqueness census over all graphs of one order")
    common(p, ("text", "json", "csv"), sources=False)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--source", metavar="PATH", help="graph6 file with the universe ('-' for stdin)")
    p.add_argument("--widen", action="store_true", help="include graphs with isolated vertices")
    p.add_argument("--method", choices=("setsystem", "direct"), default=None)
    p.add_argument("--threads", type=int, default=None, help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--classes-out", metavar="PATH", help="also write the class partition as JSON")
    p.add_argument("--header", action="store_true", help="print a CSV header line")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="recompute the published claims")
    p.add_argument("claims", nargs="*", help="claim ids (default: all)")
    p.add_argument("--quick", action="store_true", help="skip the order-8 census claims")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", metavar="PATH")
    p.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, TarError) as exc:
        print(f"tarrecon {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
