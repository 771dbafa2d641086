"""Exact threshold-width by partition search, and H-threshold testing for a fixed H."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..graphs import Digraph, Graph, bits
from .pipeline import ThresholdRepresentation, test_partition


@dataclass(frozen=True)
class WidthResult:
    """``width`` is ``None`` when no representation with at most ``max_k`` classes exists."""

    width: int | None
    max_k: int
    representation: ThresholdRepresentation | None
    partition: tuple[tuple[int, ...], ...] | None = None

    def label(self) -> str:
        return str(self.width) if self.width is not None else f">{self.max_k}"


def homogeneous_partitions(g: Graph, k: int) -> Iterator[list[int]]:
    """Partitions of ``V(g)`` into exactly ``k`` nonempty blocks, each a clique or
    an independent set, as restricted growth strings in lexicographic order.
    """
    n = g.n
    adj = g.adj
    blocks = [0] * k
    # per block: 0 = fewer than two vertices, 1 = clique, 2 = independent
    kinds = [0] * k
    labels = [0] * n

    def rec(v: int, used: int) -> Iterator[list[int]]:
        if v == n:
            if used == k:
                yield list(labels)
            return
        if n - v < k - used:
            return
        for b in range(min(used + 1, k)):
            m = blocks[b]
            kind = kinds[b]
            if m:
                seen = adj[v] & m
                if seen == m:
                    new_kind = 1
                elif not seen:
                    new_kind = 2
                else:
                    continue
                if kind and kind != new_kind:
                    continue
            else:
                new_kind = 0
            blocks[b] = m | 1 << v
            kinds[b] = new_kind
            labels[v] = b + 1
            yield from rec(v + 1, max(used, b + 1))
            blocks[b] = m
            kinds[b] = kind

    if n == 0:
        return
    yield from rec(0, 0)


def threshold_width(g: Graph, max_k: int | None = None) -> WidthResult:
    """Smallest ``k <= max_k`` admitting a threshold representation, with witness."""
    if max_k is None:
        max_k = max(g.n, 1)
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    if g.n == 0:
        return WidthResult(1, max_k, ThresholdRepresentation(Digraph(1, frozenset()), (), ()), ((),))
    for k in range(1, max_k + 1):
        for labels in homogeneous_partitions(g, k):
            parts = [[v for v in range(g.n) if labels[v] == c] for c in range(1, k + 1)]
            result = test_partition(g, parts)
            if isinstance(result, ThresholdRepresentation):
                return WidthResult(k, max_k, result, tuple(tuple(p) for p in parts))
    return WidthResult(None, max_k, None)


def is_h_threshold(g: Graph, h: Digraph) -> ThresholdRepresentation | None:
    """A class sequence realising ``g`` under ``h``, or ``None``.

    Backtracks over which vertex comes first and its class. Placing ``v`` of
    class ``c`` first forces every neighbour into a class ``d`` with
    ``(c, d)`` an arc of ``h`` and every non-neighbour into the rest; those
    domains are propagated and dead states are memoised.
    """
    k = h.n
    if g.n == 0:
        return ThresholdRepresentation(h, (), ())
    all_classes = (1 << k) - 1
    succ = h.succ
    adj = g.adj
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def solve(remaining: int, dom: dict[int, int]) -> list[tuple[int, int]] | None:
        if not remaining:
            return []
        state = (remaining, tuple(dom[v] for v in bits(remaining)))
        if state in failed:
            return None
        for v in bits(remaining):
            others = remaining & ~(1 << v)
            row = adj[v]
            for c in bits(dom[v]):
                see = succ[c]
                miss = all_classes & ~see
                new = dict(dom)
                ok = True
                for w in bits(others):
                    d = dom[w] & (see if row >> w & 1 else miss)
                    if not d:
                        ok = False
                        break
                    new[w] = d
                if not ok:
                    continue
                del new[v]
                rest = solve(others, new)
                if rest is not None:
                    return [(v, c)] + rest
        failed.add(state)
        return None

    placed = solve(g.vertex_mask, {v: all_classes for v in range(g.n)})
    if placed is None:
        return None
    return ThresholdRepresentation(h, tuple(c + 1 for _, c in placed), tuple(v for v, _ in placed))
