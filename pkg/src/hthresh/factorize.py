"""Prime factorisation of partitioned graphs under an H-product.

A left factor of ``t`` is a vertex set ``L`` such that every ``u`` in ``L``
and ``v`` outside it are adjacent exactly when ``(class(u), class(v))`` is an
arc of H. Record ``u -> v`` whenever that equation fails for the pair; then
the admissible left factors are the nonempty proper sets closed under these
implications, so the strongly connected components are the prime factors.
"""

from __future__ import annotations

import heapq

from .algebra import FactorSequence, _check_dims, factors_commute
from .canonical import canonical_key
from .digraph_algos import scc_condensation
from .graphs import Digraph, PartitionedGraph, bits


def out_masks(t: PartitionedGraph, h: Digraph) -> list[int]:
    """For each vertex ``u``: the vertices it must see if ``u`` comes first."""
    class_mask = [0] * (h.n + 1)
    for v, c in enumerate(t.classes):
        class_mask[c] |= 1 << v
    by_class = [0] * (h.n + 1)
    for c in range(1, h.n + 1):
        by_class[c] = 0
        for d in range(1, h.n + 1):
            if h.class_arc(c, d):
                by_class[c] |= class_mask[d]
    return [by_class[c] & ~(1 << u) for u, c in enumerate(t.classes)]


def build_implications(t: PartitionedGraph, h: Digraph) -> Digraph:
    """Arc ``u -> v`` iff ``u`` left of ``v`` contradicts the product rule."""
    _check_dims(h, t)
    want = out_masks(t, h)
    arcs = set()
    for u in range(t.n):
        bad = (t.graph.adj[u] ^ want[u]) & ~(1 << u)
        for v in bits(bad):
            arcs.add((u, v))
    return Digraph(t.n, frozenset(arcs))


def factor_vertex_sets(t: PartitionedGraph, h: Digraph) -> list[list[int]]:
    """Vertex sets of the prime factors, in product order."""
    imp = build_implications(t, h)
    comp, cond = scc_condensation(imp)
    members: list[list[int]] = [[] for _ in range(cond.n)]
    for v, c in enumerate(comp):
        members[c].append(v)
    keys = [canonical_key(t.induced(m)) for m in members]

    # a component may be emitted once everything it implies is already placed
    pending = [cond.succ[c].bit_count() for c in range(cond.n)]
    preds: list[list[int]] = [[] for _ in range(cond.n)]
    for a, b in cond.arcs:
        preds[b].append(a)
    ready = [(keys[c], members[c][0], c) for c in range(cond.n) if pending[c] == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        _, _, c = heapq.heappop(ready)
        out.append(members[c])
        for a in preds[c]:
            pending[a] -= 1
            if pending[a] == 0:
                heapq.heappush(ready, (keys[a], members[a][0], a))
    return out


def factorize(t: PartitionedGraph, h: Digraph) -> FactorSequence:
    if t.n == 0:
        raise ValueError("cannot factorise the empty partitioned graph")
    return FactorSequence(h, tuple(t.induced(m) for m in factor_vertex_sets(t, h)))


def is_prime(t: PartitionedGraph, h: Digraph) -> bool:
    if t.n == 0:
        raise ValueError("primality is undefined for the empty partitioned graph")
    comp, cond = scc_condensation(build_implications(t, h))
    return cond.n == 1


def normalize(seq: FactorSequence) -> FactorSequence:
    """Canonical representative of the commutation class of ``seq``.

    Repeatedly pulls to the front the smallest-key factor that commutes with
    everything before it. The result is the lexicographically least sequence
    reachable by swapping adjacent commuting factors, so in particular no
    adjacent commuting pair is out of key order.
    """
    h = seq.digraph
    rest = list(seq.factors)
    keys = [canonical_key(f) for f in rest]
    out = []
    while rest:
        best = None
        for idx, f in enumerate(rest):
            if best is not None and keys[idx] >= keys[best]:
                continue
            if all(factors_commute(rest[p], f, h, check=False) for p in range(idx)):
                best = idx
        out.append(rest.pop(best))
        keys.pop(best)
    return FactorSequence(h, tuple(out))


def commutation_matrix(seq: FactorSequence) -> list[list[bool]]:
    return [[factors_commute(a, b, seq.digraph) for b in seq.factors] for a in seq.factors]
