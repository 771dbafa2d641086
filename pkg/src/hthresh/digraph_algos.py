"""Strongly connected components, topological sorting, bipartite 2-colouring."""

from __future__ import annotations

import heapq
from collections import deque
from typing import NamedTuple

from .graphs import Digraph, Graph, bits


class TopoSort(NamedTuple):
    order: list[int] | None
    cycle: list[tuple[int, int]] | None


class TwoColoring(NamedTuple):
    colors: list[int] | None
    odd_cycle: list[int] | None


def scc_condensation(d: Digraph) -> tuple[list[int], Digraph]:
    """Tarjan's algorithm.

    Returns ``(comp, cond)`` where ``comp[v]`` is the component of ``v``.
    Components are numbered in a topological order of the condensation:
    every arc of ``cond`` goes from a lower to a higher number.
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    found: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(sorted(bits(d.succ[root]))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(bits(d.succ[w])))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                found.append(members)

    # Tarjan emits sinks first
    found.reverse()
    comp = [0] * n
    for c, members in enumerate(found):
        for v in members:
            comp[v] = c
    arcs = {(comp[i], comp[j]) for i, j in d.arcs if comp[i] != comp[j]}
    return comp, Digraph(len(found), frozenset(arcs))


def topological_sort(d: Digraph) -> TopoSort:
    """Kahn's algorithm, smallest ready vertex first.

    Returns an ordering with every arc pointing forward, or a directed cycle
    given as its list of arcs.
    """
    n = d.n
    indeg = [0] * n
    for i, j in d.arcs:
        indeg[j] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in bits(d.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) == n:
        return TopoSort(order, None)

    # every leftover vertex still has a leftover predecessor; walk backwards
    left = set(range(n)) - set(order)
    pred = {v: min(u for u in left if d.has_arc(u, v)) for v in left}
    v = min(left)
    seen: dict[int, int] = {}
    path = []
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = pred[v]
    loop = path[seen[v]:]
    loop.reverse()
    cycle = [(loop[i], loop[(i + 1) % len(loop)]) for i in range(len(loop))]
    return TopoSort(None, cycle)


def two_color_bipartite(g: Graph) -> TwoColoring:
    """BFS 2-colouring (colours 0 and 1, lowest vertex of each component gets 0)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return TwoColoring(None, _odd_cycle(parent, v, w))
    return TwoColoring(color, None)


def _odd_cycle(parent: list[int], v: int, w: int) -> list[int]:
    # v and w are adjacent with equal BFS depth parity; join their tree paths
    def path_to_root(x: int) -> list[int]:
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pv, pw = path_to_root(v), path_to_root(w)
    on_pw = set(pw)
    meet = next(x for x in pv if x in on_pw)
    return pv[: pv.index(meet) + 1] + pw[: pw.index(meet)][::-1]

