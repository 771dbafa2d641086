"""Core value types: simple graphs, digraphs with loops, partitioned graphs.

All three are immutable. Graph adjacency is stored as one bitmask per vertex,
which keeps the exhaustive searches elsewhere in the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class DimensionError(ValueError):
    """Class counts or vertex counts of two objects do not agree."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loopless adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def subgraph(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph._trusted(len(vertices), tuple(adj))

    def delete_vertex(self, v: int) -> Graph:
        return self.subgraph([u for u in range(self.n) if u != v])

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        return self.subgraph(order)

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in bits(mask))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph._trusted(a.n + b.n, a.adj + tuple(row << shift for row in b.adj))


@dataclass(frozen=True)
class Digraph:
    """Directed graph on ``0..n-1``; loops allowed, no parallel arcs.

    When a digraph plays the role of the product parameter H, its vertex
    ``c - 1`` stands for class ``c`` (classes are numbered from 1).
    """

    n: int
    arcs: frozenset[tuple[int, int]]
    succ: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        succ = [0] * self.n
        for i, j in self.arcs:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc ({i}, {j}) out of range for {self.n} vertices")
            succ[i] |= 1 << j
        object.__setattr__(self, "succ", tuple(succ))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        arcs = list(arcs)
        frozen = frozenset(arcs)
        if len(frozen) != len(arcs):
            raise ValueError("duplicate arcs")
        return cls(n, frozen)

    @classmethod
    def from_class_arcs(cls, k: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        """Build from 1-based arcs, as they are written for H."""
        return cls.from_arcs(k, [(i - 1, j - 1) for i, j in arcs])

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self.succ[i] >> j & 1)

    def class_arc(self, ci: int, cj: int) -> bool:
        """Arc test with 1-based class ids."""
        return bool(self.succ[ci - 1] >> (cj - 1) & 1)

    def has_loop(self, i: int) -> bool:
        return self.has_arc(i, i)

    def out_neighbors(self, i: int) -> set[int]:
        return {j for j in bits(self.succ[i]) if j != i}

    def in_neighbors(self, i: int) -> set[int]:
        return {j for j in range(self.n) if j != i and self.has_arc(j, i)}

    def class_arcs(self) -> list[tuple[int, int]]:
        return sorted((i + 1, j + 1) for i, j in self.arcs)

    def reverse(self) -> Digraph:
        return Digraph(self.n, frozenset((j, i) for i, j in self.arcs))

    def is_symmetric(self) -> bool:
        return all((j, i) in self.arcs for i, j in self.arcs)

    def underlying_graph(self) -> Graph:
        """Undirected simple graph of the non-loop arcs."""
        return Graph.from_edges(self.n, {(min(i, j), max(i, j)) for i, j in self.arcs if i != j})


def complement_digraph(h: Digraph) -> Digraph:
    return Digraph(h.n, frozenset((i, j) for i in range(h.n) for j in range(h.n)) - h.arcs)


def all_digraphs(k: int) -> list[Digraph]:
    """Every digraph on ``k`` labelled vertices, loops included (2**(k*k) of them)."""
    pairs = [(i, j) for i in range(k) for j in range(k)]
    return [
        Digraph(k, frozenset(p for b, p in enumerate(pairs) if code >> b & 1))
        for code in range(1 << len(pairs))
    ]


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph with every vertex assigned to one of the classes ``1..k``.

    Classes may be empty.
    """

    graph: Graph
    k: int
    classes: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("class count must be positive")
        if len(self.classes) != self.graph.n:
            raise ValueError("class assignment must cover every vertex")
        for c in self.classes:
            if not 1 <= c <= self.k:
                raise ValueError(f"class id {c} outside 1..{self.k}")

    @classmethod
    def single(cls, k: int, c: int) -> PartitionedGraph:
        """The one-vertex partitioned graph whose only vertex is in class ``c``."""
        return cls(Graph.empty(1), k, (c,))

    @classmethod
    def uniform(cls, g: Graph, k: int = 1, c: int = 1) -> PartitionedGraph:
        return cls(g, k, (c,) * g.n)

    @property
    def n(self) -> int:
        return self.graph.n

    def class_mask(self, c: int) -> int:
        return mask_of(v for v, cv in enumerate(self.classes) if cv == c)

    def support(self) -> frozenset[int]:
        """Classes that actually contain a vertex."""
        return frozenset(self.classes)

    def induced(self, vertices: Sequence[int]) -> PartitionedGraph:
        return PartitionedGraph(self.graph.subgraph(vertices), self.k, tuple(self.classes[v] for v in vertices))

    def complement(self) -> PartitionedGraph:
        """Complement the base graph, keep the classes."""
        return PartitionedGraph(complement(self.graph), self.k, self.classes)
