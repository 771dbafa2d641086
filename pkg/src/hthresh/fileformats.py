"""Text formats for digraphs, partitioned graphs and threshold witnesses.

Digraph file::

    k
    i j        # one arc (i, j) per line, 1-indexed; i == j is a loop

Partitioned graph file::

    <graph6>
    k
    c_0 c_1 ... c_{n-1}

Witness (a threshold representation) is a digraph file followed by a
``sequence:`` line and, optionally, an ``order:`` line naming the input
vertex realised by each position.
"""

from __future__ import annotations

from .graph6 import FormatError, parse_graph6, write_graph6
from .graphs import Digraph, PartitionedGraph


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what}: expected an integer, got {token!r}") from None


def parse_digraph(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("digraph file is empty")
    k = _int(lines[0], "vertex count")
    if k < 1:
        raise FormatError("digraph needs at least one vertex")
    arcs = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"arc line {ln!r} must hold two integers")
        i, j = _int(parts[0], "arc tail"), _int(parts[1], "arc head")
        if not (1 <= i <= k and 1 <= j <= k):
            raise FormatError(f"arc ({i}, {j}) outside 1..{k}")
        if (i, j) in seen:
            raise FormatError(f"duplicate arc ({i}, {j})")
        seen.add((i, j))
        arcs.append((i - 1, j - 1))
    return Digraph(k, frozenset(arcs))


def write_digraph(h: Digraph) -> str:
    lines = [str(h.n)] + [f"{i} {j}" for i, j in h.class_arcs()]
    return "\n".join(lines) + "\n"


def parse_partitioned(text: str) -> PartitionedGraph:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) < 2:
        raise FormatError("partitioned graph file needs a graph6 line and a class count")
    g = parse_graph6(lines[0])
    k = _int(lines[1], "class count")
    if k < 1:
        raise FormatError("class count must be positive")
    tokens = lines[2].split() if len(lines) > 2 else []
    if len(tokens) != g.n:
        raise FormatError(f"expected {g.n} class ids, got {len(tokens)}")
    classes = tuple(_int(t, "class id") for t in tokens)
    for c in classes:
        if not 1 <= c <= k:
            raise FormatError(f"class id {c} outside 1..{k}")
    if any(ln for ln in lines[3:]):
        raise FormatError("trailing content after the class line")
    return PartitionedGraph(g, k, classes)


def write_partitioned(t: PartitionedGraph) -> str:
    return f"{write_graph6(t.graph)}\n{t.k}\n{' '.join(map(str, t.classes))}\n"


def write_witness(h: Digraph, sequence: list[int], order: list[int] | None = None) -> str:
    out = write_digraph(h) + "sequence: " + " ".join(map(str, sequence)) + "\n"
    if order is not None:
        out += "order: " + " ".join(map(str, order)) + "\n"
    return out


def parse_witness(text: str) -> tuple[Digraph, list[int], list[int] | None]:
    digraph_lines, sequence, order = [], None, None
    for ln in text.splitlines():
        s = ln.strip()
        if s.startswith("sequence:"):
            sequence = [_int(t, "sequence entry") for t in s[len("sequence:"):].split()]
        elif s.startswith("order:"):
            order = [_int(t, "order entry") for t in s[len("order:"):].split()]
        elif s:
            digraph_lines.append(s)
    if sequence is None:
        raise FormatError("witness lacks a 'sequence:' line")
    h = parse_digraph("\n".join(digraph_lines))
    for c in sequence:
        if not 1 <= c <= h.n:
            raise FormatError(f"sequence class {c} outside 1..{h.n}")
    if order is not None and sorted(order) != list(range(len(sequence))):
        raise FormatError("order line must be a permutation of the vertices")
    return h, sequence, order
