"""The H-product of partitioned graphs and chains of such products."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .canonical import canonical_key
from .graphs import DimensionError, Digraph, Graph, PartitionedGraph


class InternalAssertion(AssertionError):
    """Two independent routes to the same answer disagreed."""


def _check_dims(h: Digraph, *parts: PartitionedGraph) -> None:
    for t in parts:
        if t.k != h.n:
            raise DimensionError(f"partitioned graph has {t.k} classes but H has {h.n} vertices")


def h_product(t: PartitionedGraph, s: PartitionedGraph, h: Digraph) -> PartitionedGraph:
    """``t`` followed by ``s`` under ``h``.

    Vertices of ``t`` keep their ids; those of ``s`` are shifted by ``t.n``.
    A vertex of class ``i`` in ``t`` is joined to every vertex of class ``j``
    in ``s`` whenever ``(i, j)`` is an arc of ``h`` (loops included).
    """
    _check_dims(h, t, s)
    shift = t.n
    # for each class c of the left side: mask (in s's numbering) of vertices it must see
    s_class = [0] * (h.n + 1)
    for v, c in enumerate(s.classes):
        s_class[c] |= 1 << v
    reach = [0] * (h.n + 1)
    for c in range(1, h.n + 1):
        m = 0
        for d in range(1, h.n + 1):
            if h.class_arc(c, d):
                m |= s_class[d]
        reach[c] = m

    adj = list(t.graph.adj) + [row << shift for row in s.graph.adj]
    for x, cx in enumerate(t.classes):
        cross = reach[cx]
        if cross:
            adj[x] |= cross << shift
            y = cross
            while y:
                low = y & -y
                adj[shift + low.bit_length() - 1] |= 1 << x
                y ^= low
    return PartitionedGraph(Graph._trusted(t.n + s.n, tuple(adj)), h.n, t.classes + s.classes)


@dataclass(frozen=True)
class FactorSequence:
    digraph: Digraph
    factors: tuple[PartitionedGraph, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factor sequence cannot be empty")
        _check_dims(self.digraph, *self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def keys(self) -> tuple[bytes, ...]:
        return tuple(canonical_key(f) for f in self.factors)


def product_chain(seq: FactorSequence) -> PartitionedGraph:
    return reduce(lambda a, b: h_product(a, b, seq.digraph), seq.factors)


def product_chain_right(seq: FactorSequence) -> PartitionedGraph:
    """Right-nested fold; equal to :func:`product_chain` by associativity."""
    return reduce(lambda b, a: h_product(a, b, seq.digraph), reversed(seq.factors))


def threshold_product(h: Digraph, sequence: Sequence[int]) -> PartitionedGraph:
    """``K_{i1} o ... o K_{in}`` built directly from the positional rule.

    Position ``p`` is joined to a later position ``q`` iff ``(i_p, i_q)`` is an
    arc of ``h``.
    """
    n = len(sequence)
    adj = [0] * n
    for p in range(n):
        cp = sequence[p]
        for q in range(p + 1, n):
            if h.class_arc(cp, sequence[q]):
                adj[p] |= 1 << q
                adj[q] |= 1 << p
    return PartitionedGraph(Graph._trusted(n, tuple(adj)), h.n, tuple(sequence))


def _commute_predicate(t: PartitionedGraph, s: PartitionedGraph, h: Digraph) -> bool:
    a, b = t.support(), s.support()
    for i in range(1, h.n + 1):
        for j in range(1, h.n + 1):
            if i == j or not h.class_arc(i, j) or h.class_arc(j, i):
                continue
            if not (
                (i not in a and j not in a)
                or (j not in a and j not in b)
                or (i not in a and i not in b)
                or (i not in b and j not in b)
            ):
                return False
    return True


def factors_commute(t: PartitionedGraph, s: PartitionedGraph, h: Digraph, check: bool = True) -> bool:
    """Whether ``t o s`` and ``s o t`` coincide.

    The answer comes from the four-condition test on class occupancy. With
    ``check`` the products are also compared up to isomorphism; the two routes
    may only differ when ``t`` and ``s`` are themselves isomorphic (then the
    swap is invisible anyway).
    """
    _check_dims(h, t, s)
    verdict = _commute_predicate(t, s, h)
    if check:
        iso = canonical_key(h_product(t, s, h)) == canonical_key(h_product(s, t, h))
        if verdict and not iso:
            raise InternalAssertion("commutation predicate holds but products differ")
        if iso and not verdict and canonical_key(t) != canonical_key(s):
            raise InternalAssertion("products are isomorphic but the commutation predicate fails")
    return verdict
