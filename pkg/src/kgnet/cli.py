"""Command-line driver.

Exit status is 0 on success (a rejected recognition is a success), 1 when
input data is malformed or inconsistent, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .derive import eval_expression, network_matrices
from .errors import KgnetError
from .keds import parse_keds
from .network import Network
from .pajek import dumps_pajek, export_pajek, loads_pajek
from .rdf import parse_triples
from .rdfnet import build_rdf_network, parse_graph, project_to_network, recognize
from .semiring import SEMIRINGS, get_semiring
from .temporal import time_slice

FORMATS = ("pajek", "triples", "keds")
_SUFFIXES = {".nt": "triples", ".keds": "keds", ".evt": "keds"}


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _guess_format(path: str, fmt: str | None) -> str:
    return fmt or _SUFFIXES.get(Path(path).suffix.lower(), "pajek")


def load_network(path: str, fmt: str | None = None, attributes=()) -> Network:
    """Load a network from a Pajek file, a triples file or KEDS event data."""
    fmt = _guess_format(path, fmt)
    text = _read(path)
    if fmt == "triples":
        return project_to_network(build_rdf_network(parse_triples(text)), attributes)
    if fmt == "keds":
        return parse_keds(text)
    return loads_pajek(text)


def _emit_network(net: Network, out: str | None) -> None:
    if out:
        export_pajek(net, out)
    else:
        sys.stdout.write(dumps_pajek(net))


def cmd_parse_triples(args):
    for tr in parse_triples(_read(args.file)):
        print(tr.statement())


def cmd_build(args):
    rdf = build_rdf_network(parse_triples(_read(args.file)))
    print(f"n_S={rdf.n_S} n_T={rdf.n_T} m={rdf.m}")


def cmd_recognize(args):
    text = _read(args.file)
    if _guess_format(args.file, args.format) == "triples":
        graph = build_rdf_network(parse_triples(text))
    else:
        graph = parse_graph(text)
    result = recognize(graph)
    if result.accepted:
        print(f"accepted: {len(result)} steps")
        for step in result:
            print(step)
    else:
        print(f"rejected: {result}")
        print(f"witness: {result.witness}")


def cmd_project(args):
    rdf = build_rdf_network(parse_triples(_read(args.file)))
    _emit_network(project_to_network(rdf, args.attribute), args.output)


def cmd_derive(args):
    sr = get_semiring(args.semiring)
    net = load_network(args.file, args.format, args.attribute)
    env = network_matrices(net, sr)
    sys.stdout.write(eval_expression(args.expr, env, sr).dump())


def cmd_keds_import(args):
    _emit_network(parse_keds(_read(args.file)), args.output)


def cmd_slice(args):
    net = load_network(args.file, args.format, args.attribute)
    _emit_network(time_slice(net, args.t), args.output)


def cmd_export(args):
    _emit_network(load_network(args.file, args.format, args.attribute), args.output)


def cmd_stats(args):
    net = load_network(args.file, args.format, args.attribute)
    print(f"n={net.n} m={net.m}")
    for mode, ids in net.modes.items():
        print(f"mode {mode}: {len(ids)}")
    for name, rel in net.relations.items():
        print(f"relation {name}: {len(rel)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgnet", description="Networks from knowledge graphs, event data and triples."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name, func, help, network_input=False, output=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        p.set_defaults(func=func)
        if network_input:
            p.add_argument("--format", choices=FORMATS,
                           help="input format (default: from the file suffix)")
            p.add_argument("--attribute", action="append", default=[], metavar="IRI",
                           help="predicate folded into node properties (triples input)")
        if output:
            p.add_argument("-o", "--output", help="write a Pajek file instead of stdout")
        return p

    command("parse-triples", cmd_parse_triples, "parse and print triples")
    command("build", cmd_build, "build the RDF network and print its counts")
    p = command("recognize", cmd_recognize, "decide whether a graph is an RDF network")
    p.add_argument("--format", choices=("graph", "triples"))
    p = command("project", cmd_project, "project triples to a multi-relational network",
                output=True)
    p.add_argument("--attribute", action="append", default=[], metavar="IRI")
    p = command("derive", cmd_derive, "evaluate a relation-matrix product",
                network_input=True)
    p.add_argument("--expr", required=True, help='e.g. "WA^T * WA"')
    p.add_argument("--semiring", choices=sorted(SEMIRINGS), default="count")
    command("keds-import", cmd_keds_import, "convert KEDS event data", output=True)
    p = command("slice", cmd_slice, "time slice of a temporal network",
                network_input=True, output=True)
    p.add_argument("--t", type=int, required=True, help="time point")
    command("export", cmd_export, "convert any input to the Pajek dialect",
            network_input=True, output=True)
    command("stats", cmd_stats, "print node, link, mode and relation counts",
            network_input=True)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        args.func(args)
    except (KgnetError, OSError, UnicodeDecodeError) as e:
        print(f"kgnet {args.command}: error: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
