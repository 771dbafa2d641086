"""Small named graphs and the two 2-vertex digraphs of threshold and difference graphs."""

from __future__ import annotations

from .graphs import Digraph, Graph, complement, disjoint_union


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def matching(m: int) -> Graph:
    return Graph.from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


C4 = cycle(4)
C5 = cycle(5)
P3 = path(3)
P4 = path(4)
P5 = path(5)
TWO_K2 = matching(2)
HOUSE = complement(P5)
P3_P2 = disjoint_union(P3, path(2))
# hub 0 joined to the rim 1-2-3-4
W4 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)])
# triangle 0-1-2 with pendants 3 at 0 and 4 at 1
BULL = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
PETERSEN = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                            + [(i, i + 5) for i in range(5)])

# class 1 vertices see everything after them, class 2 vertices see nothing after them
H0 = Digraph.from_class_arcs(2, [(1, 1), (1, 2)])
H_PRIME = Digraph.from_class_arcs(2, [(1, 2)])

NAMED_OBSTRUCTIONS: dict[str, Graph] = {
    "C5": C5,
    "P5": P5,
    "House": HOUSE,
    "P3+P2": P3_P2,
    "co-(P3+P2)": complement(P3_P2),
    "W4": W4,
    "co-W4": complement(W4),
    "Bull": BULL,
}
