"""``hthresh`` command line.

Exit codes: 0 success, 1 negative answer (``represent`` found no
representation, ``verify`` mismatch), 2 unreadable input, 3 class count and
digraph size disagree, 4 internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import InternalAssertion, h_product, product_chain, threshold_product
from .canonical import canonical_key
from .factorize import commutation_matrix, factorize, normalize
from .fileformats import parse_digraph, parse_partitioned, parse_witness, write_partitioned, write_witness
from .graph6 import FormatError, parse_graph6, write_graph6
from .graphs import DimensionError, Digraph, Graph, PartitionedGraph
from .obstructions import MAX_MINING_ORDER, mine_minimal_obstructions
from .threshold import (
    PartitionFailure,
    ThresholdRepresentation,
    classes_to_partition,
    recognize_width2,
    test_partition,
    threshold_width,
)

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_DIMENSION, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def _read_graph(path: str) -> Graph:
    lines = [ln for ln in _read(path).splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError(f"{path}: expected exactly one graph6 line")
    return parse_graph6(lines[0])


def _dot(t: PartitionedGraph, h: Digraph | None = None) -> str:
    out = ["graph G {"]
    out += [f'  {v} [label="{v}:{c}"];' for v, c in enumerate(t.classes)]
    out += [f"  {u} -- {v};" for u, v in t.graph.edges()]
    out.append("}")
    if h is not None:
        out.append("digraph H {")
        out += [f"  {i};" for i in range(1, h.n + 1)]
        out += [f"  {i} -> {j};" for i, j in h.class_arcs()]
        out.append("}")
    return "\n".join(out) + "\n"


def _rep_json(rep: ThresholdRepresentation) -> dict:
    return {"k": rep.k, "arcs": [list(a) for a in rep.digraph.class_arcs()],
            "sequence": list(rep.sequence), "order": list(rep.order)}


def _rep_out(g: Graph, rep: ThresholdRepresentation, fmt: str) -> str:
    if fmt == "dot":
        classes = [0] * g.n
        for v, c in zip(rep.order, rep.sequence):
            classes[v] = c
        return _dot(PartitionedGraph(g, rep.k, tuple(classes)), rep.digraph)
    return write_witness(rep.digraph, list(rep.sequence), list(rep.order))


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_product(args) -> int:
    h = parse_digraph(_read(args.digraph))
    parts = [parse_partitioned(_read(p)) for p in args.inputs]
    t = parts[0]
    for s in parts[1:]:
        t = h_product(t, s, h)
    if args.format == "json":
        _emit(json.dumps({"graph6": write_graph6(t.graph), "k": t.k, "classes": list(t.classes)}) + "\n")
    elif args.format == "dot":
        _emit(_dot(t, h))
    else:
        _emit(write_partitioned(t))
    return EXIT_OK


def cmd_factorize(args) -> int:
    h = parse_digraph(_read(args.digraph))
    t = parse_partitioned(_read(args.input))
    seq = normalize(factorize(t, h))
    if canonical_key(product_chain(seq)) != canonical_key(t):
        raise InternalAssertion("the factors do not multiply back to the input")
    if args.format == "json":
        _emit(json.dumps({"factors": [
            {"graph6": write_graph6(f.graph), "classes": list(f.classes), "key": canonical_key(f).hex()}
            for f in seq.factors], "commutation": commutation_matrix(seq)}) + "\n")
    elif args.format == "dot":
        _emit("".join(_dot(f) for f in seq.factors))
    else:
        _emit("".join(write_partitioned(f) + "\n" for f in seq.factors))
    return EXIT_OK


def cmd_width(args) -> int:
    g = _read_graph(args.input)
    result = threshold_width(g, args.max_k)
    if args.format == "json":
        _emit(json.dumps({"width": result.label(),
                          "representation": _rep_json(result.representation) if result.representation else None}) + "\n")
        return EXIT_OK
    _emit(result.label() + "\n")
    if result.representation is not None:
        _emit(_rep_out(g, result.representation, args.format))
    return EXIT_OK


def cmd_represent(args) -> int:
    t = parse_partitioned(_read(args.input))
    result = test_partition(t.graph, classes_to_partition(t.classes, t.k))
    if isinstance(result, PartitionFailure):
        if args.format == "json":
            _emit(json.dumps({"stage": result.stage, "detail": repr(result.detail)}) + "\n")
        else:
            _emit(f"fail {result.stage}\n")
        return EXIT_NO
    if not result.reproduces(t.graph):
        raise InternalAssertion("synthesised representation does not rebuild the input")
    if args.format == "json":
        _emit(json.dumps(_rep_json(result)) + "\n")
    else:
        _emit(_rep_out(t.graph, result, args.format))
    return EXIT_OK


def cmd_recognize2(args) -> int:
    g = _read_graph(args.input)
    result = recognize_width2(g)
    if args.format == "json":
        rep = result.representation
        _emit(json.dumps({"result": result.label(), "route": result.route,
                          "representation": _rep_json(rep) if rep else None}) + "\n")
        return EXIT_OK
    _emit(result.label() + "\n")
    if args.format == "dot" and result.representation is not None:
        _emit(_rep_out(g, result.representation, "dot"))
    return EXIT_OK


def cmd_mine(args) -> int:
    if not 1 <= args.max_n <= MAX_MINING_ORDER:
        raise FormatError(f"--max-n must lie in 1..{MAX_MINING_ORDER}")
    found = mine_minimal_obstructions(args.max_n, jobs=args.jobs)
    if args.format == "text":
        for m in found.members:
            _emit(f"{m.graph6} {m.graph.n} {found.members[m.partner].graph6} {m.name}\n")
    else:
        _emit(json.dumps(found.report(), indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.input)
    h, sequence, order = parse_witness(_read(args.witness))
    built = threshold_product(h, sequence).graph
    if order is not None:
        ok = len(order) == g.n and g.relabel(order) == built
    else:
        ok = built.n == g.n and canonical_key(PartitionedGraph.uniform(built)) == canonical_key(PartitionedGraph.uniform(g))
    _emit("ok\n" if ok else "mismatch\n")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hthresh", description="H-products, threshold representations and threshold-width.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, formats=("text", "json", "dot")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    p = add("product", cmd_product, "multiply partitioned graphs left to right")
    p.add_argument("inputs", nargs="+", metavar="PG", help="partitioned graph files ('-' for stdin)")
    p.add_argument("--digraph", required=True, metavar="PATH")

    p = add("factorize", cmd_factorize, "prime factors in normal order")
    p.add_argument("input", metavar="PG")
    p.add_argument("--digraph", required=True, metavar="PATH")

    p = add("width", cmd_width, "exact threshold-width with a witness")
    p.add_argument("input", metavar="GRAPH6_FILE")
    p.add_argument("--max-k", type=int, default=4)

    p = add("represent", cmd_represent, "threshold representation with the given classes")
    p.add_argument("input", metavar="PG")

    p = add("recognize2", cmd_recognize2, "decide threshold-width 1, 2 or more")
    p.add_argument("input", metavar="GRAPH6_FILE")

    p = add("mine", cmd_mine, "minimal graphs of threshold-width above 2", formats=("json", "text"))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)

    p = add("verify", cmd_verify, "check a witness against a graph", formats=("text",))
    p.add_argument("input", metavar="GRAPH6_FILE")
    p.add_argument("witness", metavar="WITNESS_FILE")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_k", 1) < 1:
        print("hthresh: --max-k must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    if getattr(args, "jobs", 1) < 1:
        print("hthresh: --jobs must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except DimensionError as exc:
        print(f"hthresh: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except FormatError as exc:
        print(f"hthresh: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalAssertion as exc:
        print(f"hthresh: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        # well-formed files describing an input the operation rejects
        print(f"hthresh: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
