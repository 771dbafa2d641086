"""Testing one partition: ordering -> family -> realisation -> F -> build order.

On success the digraph H and the class sequence of a threshold
representation are read off the realisation and a topological order of F.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..algebra import threshold_product
from ..digraph_algos import topological_sort, two_color_bipartite
from ..graphs import Digraph, Graph
from .family import _components, build_family, realize_family, realizes, slot
from .ordering import (
    ASCENDING,
    DESCENDING,
    FULL,
    OrderingCertificate,
    OrderingFailure,
    check_neighborhood_ordering,
)


@dataclass(frozen=True)
class ThresholdRepresentation:
    """``g`` equals ``K_{sequence[0]} o ... o K_{sequence[-1]}`` under ``digraph``.

    ``order[p]`` is the vertex of ``g`` realised at position ``p``.
    """

    digraph: Digraph
    sequence: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.digraph.n

    def rebuild(self) -> Graph:
        return threshold_product(self.digraph, self.sequence).graph

    def reproduces(self, g: Graph) -> bool:
        """Exact check: position ``p`` of the product is vertex ``order[p]`` of ``g``."""
        return len(self.order) == g.n and g.relabel(self.order) == self.rebuild()


@dataclass(frozen=True)
class PartitionFailure:
    """``stage`` is ``"ordering"``, ``"digraphical"`` or ``"acyclic"``."""

    stage: str
    detail: object


def build_F(g: Graph, cert: OrderingCertificate, d: Digraph) -> Digraph:
    if not realizes(d, build_family(cert)):
        raise ValueError("digraph does not realise the family of this certificate")
    parts = cert.parts
    arcs = set()
    for i, j in d.arcs:
        for u in parts[i]:
            row = g.adj[u]
            for v in parts[j]:
                arcs.add((u, v) if row >> v & 1 else (v, u))
    for i in range(1, cert.k + 1):
        path = cert.psi[i - 1]
        x1 = {j for j in range(1, cert.k + 1) if j != i and cert.directions[(i, j)] == DESCENDING}
        if {j + 1 for j in d.out_neighbors(i - 1)} != x1:
            path = path[::-1]
        arcs.update(zip(path, path[1:]))
    return Digraph(g.n, frozenset(arcs))


def synthesize_h(cert: OrderingCertificate, d: Digraph) -> Digraph:
    """Extend ``d`` by loops on clique classes and both arcs between fully joined classes."""
    arcs = set(d.arcs)
    for i in range(1, cert.k + 1):
        if cert.cliques[i - 1]:
            arcs.add((i - 1, i - 1))
        for j in range(1, cert.k + 1):
            if i != j and cert.directions[(i, j)] == FULL:
                arcs.add((i - 1, j - 1))
                arcs.add((j - 1, i - 1))
    return Digraph(cert.k, frozenset(arcs))


def certificate_variants(cert: OrderingCertificate) -> Iterator[OrderingCertificate]:
    """The certificate itself, then every other placement of its flexible pairs.

    A flexible pair ``(i, j)`` leaves ``j`` free to sit in either set of class
    ``i``. Colour the slot graph without those memberships; each colouring
    fixes the arc between ``i`` and ``j`` from ``j``'s side, and ``j`` goes to
    the matching slot of ``i``. Components carrying no cross edge cannot change
    the outcome (their classes consist of twins), and a global flip only
    reverses the realisation, so those are not enumerated.
    """
    yield cert
    if not cert.flexible:
        return
    k = cert.k
    fam = build_family(cert)
    edges = set()
    for i in range(1, k + 1):
        edges.add((slot(i, 1), slot(i, 2)))
        for j in range(i + 1, k + 1):
            if (i, j) in cert.flexible or (j, i) in cert.flexible:
                continue
            for q in (1, 2):
                for p in (1, 2):
                    if j in fam.sets[i - 1][q - 1] and i in fam.sets[j - 1][p - 1]:
                        edges.add((slot(i, q), slot(j, p)))
    reduced = Graph.from_edges(2 * k, edges)
    base = two_color_bipartite(reduced).colors
    if base is None:
        return
    comp = _components(reduced)
    sizes: dict[int, int] = {}
    for c in comp:
        sizes[c] = sizes.get(c, 0) + 1
    free = sorted(c for c, size in sizes.items() if size > 2)[1:]

    seen = {tuple(sorted((p, cert.directions[p]) for p in cert.flexible))}
    for flips in itertools.product((0, 1), repeat=len(free)):
        flip_of = dict(zip(free, flips))
        colors = [c ^ flip_of.get(comp[v], 0) for v, c in enumerate(base)]
        changes = {}
        for i, j in cert.flexible:
            p = 1 if i in fam.sets[j - 1][0] else 2
            j_points_at_i = colors[slot(j, p)] == 0
            target = 1 if j_points_at_i else 0
            q = 1 if colors[slot(i, 1)] == target else 2
            changes[(i, j)] = DESCENDING if q == 1 else ASCENDING
        sig = tuple(sorted(changes.items()))
        if sig in seen:
            continue
        seen.add(sig)
        yield cert.with_directions(changes)


def run_certificate(g: Graph, cert: OrderingCertificate) -> ThresholdRepresentation | PartitionFailure:
    """The fixed-certificate pipeline: family, realisation, F, topological order."""
    family = build_family(cert)
    real = realize_family(family)
    if real.digraph is None:
        return PartitionFailure("digraphical", real.odd_cycle)
    f = build_F(g, cert, real.digraph)
    topo = topological_sort(f)
    if topo.order is None:
        return PartitionFailure("acyclic", topo.cycle)
    h = synthesize_h(cert, real.digraph)
    class_of = {}
    for i, part in enumerate(cert.parts, start=1):
        for v in part:
            class_of[v] = i
    return ThresholdRepresentation(h, tuple(class_of[v] for v in topo.order), tuple(topo.order))


_STAGE_RANK = {"ordering": 0, "digraphical": 1, "acyclic": 2}


def test_partition(g: Graph, partition: Sequence[Iterable[int]]) -> ThresholdRepresentation | PartitionFailure:
    """Decide whether ``g`` has a threshold representation whose classes are ``partition``.

    ``partition[i-1]`` becomes class ``i``. Failures report the furthest stage
    any placement of the flexible pairs reached.
    """
    cert = check_neighborhood_ordering(g, partition)
    if isinstance(cert, OrderingFailure):
        return PartitionFailure("ordering", cert)
    worst: PartitionFailure | None = None
    for variant in certificate_variants(cert):
        result = run_certificate(g, variant)
        if isinstance(result, ThresholdRepresentation):
            return result
        if worst is None or _STAGE_RANK[result.stage] > _STAGE_RANK[worst.stage]:
            worst = result
    assert worst is not None
    return worst


test_partition.__test__ = False  # not a pytest test despite the name


def classes_to_partition(classes: Sequence[int], k: int | None = None) -> list[list[int]]:
    k = k or max(classes, default=1)
    parts: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(classes):
        parts[c - 1].append(v)
    return parts


__all__ = [
    "PartitionFailure",
    "ThresholdRepresentation",
    "build_F",
    "certificate_variants",
    "classes_to_partition",
    "run_certificate",
    "synthesize_h",
    "test_partition",
]
