"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from functools import lru_cache

from hthresh.algebra import factors_commute
from hthresh.canonical import canonical_key
from hthresh.graphs import Digraph, Graph, PartitionedGraph


def brute_isomorphic(a: PartitionedGraph, b: PartitionedGraph) -> bool:
    if a.n != b.n or a.k != b.k or sorted(a.classes) != sorted(b.classes):
        return False
    for perm in itertools.permutations(range(a.n)):
        if all(a.classes[v] == b.classes[perm[v]] for v in range(a.n)) and all(
            a.graph.has_edge(u, v) == b.graph.has_edge(perm[u], perm[v])
            for u in range(a.n) for v in range(u + 1, a.n)
        ):
            return True
    return False


def partitioned_graphs(graphs, k: int) -> list[PartitionedGraph]:
    """Every class assignment with ``k`` classes on the given graphs, up to isomorphism."""
    seen = {}
    for g in graphs:
        for classes in itertools.product(range(1, k + 1), repeat=g.n):
            t = PartitionedGraph(g, k, classes)
            seen.setdefault(canonical_key(t), t)
    return [seen[key] for key in sorted(seen)]


def _masks(t: PartitionedGraph, h: Digraph) -> list[int]:
    """For each vertex: the vertices of ``t`` it must see when it is on the left."""
    out = []
    for u in range(t.n):
        m = 0
        for v in range(t.n):
            if v != u and (t.classes[u] - 1, t.classes[v] - 1) in h.arcs:
                m |= 1 << v
        out.append(m)
    return out


def _members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _submasks(mask: int):
    sub = (mask - 1) & mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def brute_factorizations(t: PartitionedGraph, h: Digraph) -> list[tuple[int, ...]]:
    """Every way to write ``t`` as a product of primes, as sequences of vertex masks.

    ``L`` can stand left of ``R`` iff no ``u`` in ``L`` disagrees with the
    product rule on any vertex of ``R``.
    """
    adj = t.graph.adj
    want = _masks(t, h)
    full = (1 << t.n) - 1
    # violated[L]: vertices on which some member of L disagrees with the rule
    violated = [0] * (full + 1)
    for left in range(1, full + 1):
        low = left & -left
        u = low.bit_length() - 1
        violated[left] = violated[left ^ low] | (adj[u] ^ want[u])

    def splits(left: int, whole: int) -> bool:
        return not violated[left] & whole & ~left

    @lru_cache(maxsize=None)
    def prime(mask: int) -> bool:
        return not any(splits(sub, mask) for sub in _submasks(mask))

    @lru_cache(maxsize=None)
    def seqs(mask: int) -> tuple[tuple[int, ...], ...]:
        out = []
        if prime(mask):
            out.append((mask,))
        for left in _submasks(mask):
            if prime(left) and splits(left, mask):
                out.extend((left,) + rest for rest in seqs(mask & ~left))
        return tuple(out)

    return list(seqs(full))


def normalized_keys(t: PartitionedGraph, h: Digraph, sequences: list[tuple[int, ...]],
                    keys: dict[int, bytes] | None = None) -> set[tuple[bytes, ...]]:
    """Lexicographically least commutation-equivalent key sequence of each input.

    ``keys`` caches canonical keys of induced subgraphs by vertex mask and may
    be shared between calls on the same ``t``.
    """
    keys = {} if keys is None else keys

    def key(m: int) -> bytes:
        if m not in keys:
            keys[m] = canonical_key(t.induced(_members(m)))
        return keys[m]

    commute = lru_cache(maxsize=None)(
        lambda a, b: factors_commute(t.induced(_members(a)), t.induced(_members(b)), h, check=False)
    )
    result = set()
    for seq in sequences:
        # least linear extension of "a must precede b when they do not commute"
        rest = list(seq)
        out = []
        while rest:
            free = [x for i, x in enumerate(rest) if all(commute(y, x) for y in rest[:i])]
            pick = min(free, key=key)
            out.append(key(pick))
            rest.remove(pick)
        result.add(tuple(out))
    return result


def reachable(d: Digraph) -> list[int]:
    """Transitive closure by repeated squaring of the successor masks."""
    reach = [d.succ[v] | 1 << v for v in range(d.n)]
    changed = True
    while changed:
        changed = False
        for v in range(d.n):
            new = reach[v]
            for w in _members(reach[v]):
                new |= reach[w]
            if new != reach[v]:
                reach[v] = new
                changed = True
    return reach


def peel_oracle(g: Graph, labels: list[int], k: int) -> bool:
    """Is there a digraph on ``k`` classes under which ``g`` is a product with these classes?

    Loops are fixed by the classes themselves; every choice of the other arcs is
    tried, and a build order is found by repeatedly taking any vertex that is
    consistent with all remaining ones.
    """
    loops = set()
    for c in range(1, k + 1):
        vs = [v for v in range(g.n) if labels[v] == c]
        if len(vs) >= 2 and g.has_edge(vs[0], vs[1]):
            loops.add((c, c))
    pairs = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j]
    for choice in range(1 << len(pairs)):
        arcs = loops | {p for x, p in enumerate(pairs) if choice >> x & 1}
        left = set(range(g.n))
        while left:
            first = next((v for v in sorted(left) if all(
                g.has_edge(v, w) == ((labels[v], labels[w]) in arcs) for w in left if w != v)), None)
            if first is None:
                break
            left.discard(first)
        if not left:
            return True
    return False


def positional_graph(h: Digraph, sequence: list[int]) -> Graph:
    """``v_p ~ v_q`` for ``p < q`` iff ``(i_p, i_q)`` is an arc of ``h``."""
    n = len(sequence)
    return Graph.from_edges(n, [(p, q) for p in range(n) for q in range(p + 1, n)
                                if h.class_arc(sequence[p], sequence[q])])
