"""Induced-subgraph search, small-graph enumeration and the obstruction miner for width 2."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .canonical import canonical_graph, graph_key
from .graph6 import write_graph6
from .graphs import Graph, complement
from .named import NAMED_OBSTRUCTIONS
from .threshold.recognize import recognize_width2

MAX_ENUMERATION_ORDER = 8
MAX_MINING_ORDER = 7


def contains_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An embedding ``phi`` (``phi[p]`` is the image of pattern vertex ``p``) or ``None``.

    ``phi`` preserves both edges and non-edges.
    """
    m, n = pattern.n, g.n
    if m > n:
        return None
    if m == 0:
        return ()
    if pattern.edge_count() > g.edge_count():
        return None
    if m * (m - 1) // 2 - pattern.edge_count() > n * (n - 1) // 2 - g.edge_count():
        return None

    # most constrained pattern vertices first, each joined to earlier ones where possible
    order: list[int] = []
    left = set(range(m))
    while left:
        placed = set(order)
        p = max(left, key=lambda x: (len(placed & set(pattern.neighbors(x))), pattern.degree(x), -x))
        order.append(p)
        left.discard(p)

    gdeg = [g.degree(v) for v in range(n)]
    cands = []
    for p in order:
        d = pattern.degree(p)
        co = m - 1 - d
        cands.append([v for v in range(n) if gdeg[v] >= d and n - 1 - gdeg[v] >= co])

    image = [-1] * m
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == m:
            return True
        p = order[depth]
        prow = pattern.adj[p]
        for v in cands[depth]:
            if used >> v & 1:
                continue
            grow = g.adj[v]
            if any((prow >> q & 1) != (grow >> image[q] & 1) for q in order[:depth]):
                continue
            image[p] = v
            used |= 1 << v
            if extend(depth + 1):
                return True
            used &= ~(1 << v)
        image[p] = -1
        return False

    return tuple(image) if extend(0) else None


def contains_any(g: Graph, patterns: Sequence[Graph]) -> tuple[int, tuple[int, ...]] | None:
    """``(index, embedding)`` for the first pattern, smallest first, found induced in ``g``."""
    for idx in sorted(range(len(patterns)), key=lambda i: (patterns[i].n, i)):
        phi = contains_induced(g, patterns[idx])
        if phi is not None:
            return idx, phi
    return None


@lru_cache(maxsize=None)
def _graphs_of_order(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    found: dict[bytes, Graph] = {}
    for base in _graphs_of_order(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            g = Graph._trusted(n, tuple(adj) + (nbrs,))
            key = graph_key(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of ``n``-vertex graphs."""
    if not 0 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration is limited to orders 0..{MAX_ENUMERATION_ORDER}")
    return _graphs_of_order(n)


@dataclass(frozen=True)
class Obstruction:
    graph: Graph
    partner: int  # index of the complement in ObstructionSet.members
    name: str
    deletions: tuple[str, ...]  # width label of g - v for each vertex v

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)


@dataclass(frozen=True)
class ObstructionSet:
    max_n: int
    members: tuple[Obstruction, ...]

    @property
    def graphs(self) -> list[Graph]:
        return [m.graph for m in self.members]

    def classes(self) -> list[tuple[int, ...]]:
        """Complement classes as sorted index tuples."""
        return sorted({tuple(sorted({i, m.partner})) for i, m in enumerate(self.members)})

    def report(self) -> dict:
        return {
            "max_n": self.max_n,
            "graphs": len(self.members),
            "classes": len(self.classes()),
            "obstructions": [
                {
                    "graph6": m.graph6,
                    "order": m.graph.n,
                    "edges": [list(e) for e in m.graph.edges()],
                    "complement": self.members[m.partner].graph6,
                    "self_complementary": m.partner == i,
                    "name": m.name,
                    "deletions": list(m.deletions),
                }
                for i, m in enumerate(self.members)
            ],
        }


def _classify(g: Graph) -> tuple[Graph, tuple[str, ...]] | None:
    """``(g, deletion labels)`` when ``g`` is a minimal obstruction, else ``None``."""
    if recognize_width2(g).width is not None:
        return None
    labels = tuple(recognize_width2(g.delete_vertex(v)).label() for v in range(g.n))
    if ">2" in labels:
        return None
    return g, labels


def _classify_chunk(graphs: Sequence[Graph]) -> list[tuple[Graph, tuple[str, ...]]]:
    return [r for r in map(_classify, graphs) if r is not None]


def _named(key: bytes) -> str:
    for name, g in NAMED_OBSTRUCTIONS.items():
        if graph_key(g) == key:
            return name
    return "X/Y/Z candidate"


def mine_minimal_obstructions(max_n: int, jobs: int = 1) -> ObstructionSet:
    """All minimal graphs of threshold-width above 2 with at most ``max_n`` vertices."""
    if not 1 <= max_n <= MAX_MINING_ORDER:
        raise ValueError(f"mining is limited to orders 1..{MAX_MINING_ORDER}")
    found: list[tuple[Graph, tuple[str, ...]]] = []
    for n in range(1, max_n + 1):
        graphs = enumerate_graphs(n)
        if jobs > 1 and len(graphs) > 1:
            size = -(-len(graphs) // jobs)
            chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
            with ProcessPoolExecutor(jobs) as pool:
                for part in pool.map(_classify_chunk, chunks):
                    found.extend(part)
        else:
            found.extend(_classify_chunk(graphs))

    keyed = sorted(((graph_key(g), g, labels) for g, labels in found), key=lambda x: (x[1].n, x[0]))
    index = {key: i for i, (key, _, _) in enumerate(keyed)}
    members = []
    for key, g, labels in keyed:
        partner = index.get(graph_key(complement(g)))
        if partner is None:
            raise AssertionError("the obstruction set is not closed under complementation")
        members.append(Obstruction(g, partner, _named(key), labels))
    return ObstructionSet(max_n, tuple(members))


def equivalence_counterexamples(obstructions: Iterable[Graph], max_n: int) -> list[Graph]:
    """Graphs up to ``max_n`` vertices where width <= 2 and freeness disagree."""
    patterns = list(obstructions)
    bad = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            small = recognize_width2(g).width is not None
            free = contains_any(g, patterns) is None and contains_any(complement(g), patterns) is None
            if small != free:
                bad.append(g)
    return bad
