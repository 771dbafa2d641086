"""Fast recognisers for threshold and difference graphs, and for width at most 2."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import InternalAssertion
from ..graphs import Graph, bits, complement
from .pipeline import ThresholdRepresentation, test_partition


def is_threshold(g: Graph) -> bool:
    """Every two vertices have nested neighbourhoods, up to the pair itself."""
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            nu, nv = adj[u] & ~(1 << v), adj[v] & ~(1 << u)
            if nu & ~nv and nv & ~nu:
                return False
    return True


def threshold_split(g: Graph) -> tuple[list[int], list[int]] | None:
    """``(clique, independent)`` found by peeling dominating and isolated vertices."""
    clique: list[int] = []
    indep: list[int] = []
    left = g.vertex_mask
    while left:
        for v in bits(left):
            row = g.adj[v] & left
            if not row:
                indep.append(v)
                break
            if row == left & ~(1 << v):
                clique.append(v)
                break
        else:
            return None
        left &= ~(1 << v)
    return sorted(clique), sorted(indep)


def difference_bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Sides ``(A, B)`` of a difference graph, isolated vertices placed in ``A``."""
    adj = g.adj
    active = [v for v in range(g.n) if adj[v]]
    side: dict[int, int] = {}
    if active:
        side[active[0]] = 0
        stack = [active[0]]
        while stack:
            v = stack.pop()
            for w in bits(adj[v]):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
        # two edge-carrying pieces would give disjoint non-empty neighbourhoods
        if len(side) != len(active):
            return None
    a = [v for v in range(g.n) if side.get(v, 0) == 0]
    b = [v for v in range(g.n) if side.get(v) == 1]
    for part in (a, b):
        rows = sorted((adj[v] for v in part), key=int.bit_count)
        for x, y in zip(rows, rows[1:]):
            if x & ~y:
                return None
    return a, b


def is_difference(g: Graph) -> bool:
    return difference_bipartition(g) is not None


@dataclass(frozen=True)
class Width2Result:
    """``width`` is 1, 2 or ``None`` (meaning more than 2)."""

    width: int | None
    route: str | None = None
    partition: tuple[tuple[int, ...], ...] | None = None
    representation: ThresholdRepresentation | None = None

    def label(self) -> str:
        if self.width is None:
            return ">2"
        return "1" if self.width == 1 else f"2 {self.route}"


def recognize_width2(g: Graph) -> Width2Result:
    if g.is_clique(g.vertex_mask) or g.is_independent(g.vertex_mask):
        return Width2Result(1)
    co = complement(g)
    routes = (
        ("threshold", threshold_split, g),
        ("difference", difference_bipartition, g),
        ("co-threshold", threshold_split, co),
        ("co-difference", difference_bipartition, co),
    )
    for route, find, target in routes:
        split = find(target)
        if split is None:
            continue
        rep = test_partition(g, split)
        if not isinstance(rep, ThresholdRepresentation):
            raise InternalAssertion(f"{route} split {split} failed the partition test: {rep}")
        return Width2Result(2, route, tuple(map(tuple, split)), rep)
    return Width2Result(None)
