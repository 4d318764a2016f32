"""``flows`` command line tool.

Exit codes: 0 flow found / flow valid, 2 no flow / flow invalid, 1 any usage,
I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from mbqcflow.analysis import FlowStructureError, verify_flow
from mbqcflow.bench import FAMILIES, rows_to_csv, run_bench
from mbqcflow.causal import find_causal_flow
from mbqcflow.dot import to_dot
from mbqcflow.gflow import find_gflow
from mbqcflow.graph import GraphFormatError, parse_open_graph, random_open_graph, serialize_open_graph
from mbqcflow.io import KINDS, FlowDocument
from mbqcflow.oracle import OracleGuardError, brute_force_causal_flow, brute_force_gflow

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_find(args) -> int:
    graph = parse_open_graph(_read(args.graph))
    flow = (find_causal_flow if args.kind == "causal" else find_gflow)(graph)
    _emit(FlowDocument.from_flow(graph, args.kind, flow).to_json(), args.output)
    return EXIT_OK if flow is not None else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    graph = parse_open_graph(_read(args.graph))
    if args.kind == "causal":
        found = brute_force_causal_flow(graph, max_n=args.guard or 7)
    else:
        found = brute_force_gflow(graph, max_n=args.guard or 6)
    flow = None if found is None else found[0]
    _emit(FlowDocument.from_flow(graph, args.kind, flow).to_json(), args.output)
    return EXIT_OK if flow is not None else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    graph = parse_open_graph(_read(args.graph))
    doc = FlowDocument.from_json(_read(args.flow))
    if args.kind and args.kind != doc.kind:
        raise FlowStructureError(f"flow document holds a {doc.kind} flow, not {args.kind}")
    flow = doc.to_flow(graph)
    if flow is None:
        raise FlowStructureError("flow document records that no flow exists")
    report = verify_flow(graph, flow)
    sys.stdout.write(json.dumps(report.to_dict(graph)) + "\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    graph = random_open_graph(args.n, args.m, args.inputs, args.outputs, args.seed)
    _emit(serialize_open_graph(graph), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(args.family, args.sizes, args.kind, seed=args.seed, jobs=args.jobs, min_time=args.min_time)
    _emit(rows_to_csv(rows), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    graph = parse_open_graph(_read(args.graph))
    flow = None
    if args.flow:
        flow = FlowDocument.from_json(_read(args.flow)).to_flow(graph)
    _emit(to_dot(graph, flow), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flows", description="Find, check and benchmark causal flows and gflows of open graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("find", help="search for a maximally delayed flow")
    p.add_argument("graph")
    p.add_argument("--kind", choices=KINDS, default="gflow")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("oracle", help="exhaustive reference search (tiny graphs only)")
    p.add_argument("graph")
    p.add_argument("--kind", choices=KINDS, default="gflow")
    p.add_argument("--guard", type=int, help="maximum vertex count (default 7 causal, 6 gflow)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a flow document against a graph")
    p.add_argument("graph")
    p.add_argument("flow")
    p.add_argument("--kind", choices=KINDS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a seeded random open graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--inputs", type=int, default=0)
    p.add_argument("--outputs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a finder over a size sweep, CSV output")
    p.add_argument("--family", choices=FAMILIES, default="line")
    p.add_argument("--sizes", type=_sizes, required=True, help="comma-separated vertex counts")
    p.add_argument("--kind", choices=KINDS, default="causal")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--min-time", type=float, default=0.05, help="seconds of repeated runs per size")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dot", help="Graphviz rendering, layered when a flow is given")
    p.add_argument("graph")
    p.add_argument("flow", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError, FlowStructureError, OracleGuardError, ValueError) as exc:
        print(f"flows: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
