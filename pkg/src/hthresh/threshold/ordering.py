"""Neighbourhood-ordering certificates for a partition into cliques and independent sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..graphs import Graph, bits, mask_of

DESCENDING = "descending"
ASCENDING = "ascending"
FULL = "full"
EMPTY = "empty"


@dataclass(frozen=True)
class OrderingCertificate:
    """Orderings ``psi[i-1]`` of each class and the direction of every class pair.

    ``directions[(i, j)]`` says how ``N_{V_j}(u)`` evolves as ``u`` runs along
    ``psi[i-1]``. ``flexible`` holds the non-trivial pairs ``(i, j)`` on which
    every vertex of ``V_i`` sees the same part of ``V_j``; both chain types hold
    there and the stored direction is only a default.
    """

    parts: tuple[tuple[int, ...], ...]
    cliques: tuple[bool, ...]
    psi: tuple[tuple[int, ...], ...]
    directions: Mapping[tuple[int, int], str] = field(hash=False)
    flexible: frozenset[tuple[int, int]] = frozenset()

    @property
    def k(self) -> int:
        return len(self.parts)

    def nontrivial(self, i: int, j: int) -> bool:
        return self.directions[(i, j)] in (DESCENDING, ASCENDING)

    def with_directions(self, changes: Mapping[tuple[int, int], str]) -> OrderingCertificate:
        directions = dict(self.directions)
        directions.update(changes)
        return OrderingCertificate(self.parts, self.cliques, self.psi, directions, self.flexible)


@dataclass(frozen=True)
class OrderingFailure:
    """Why no certificate exists.

    ``reason`` is one of ``"mixed-part"`` (class ``cls`` is neither a clique
    nor independent; ``vertices`` = an adjacent pair then a non-adjacent pair),
    ``"incomparable"`` (``vertices`` = ``u, v`` in class ``cls`` whose
    neighbourhoods in class ``other`` are incomparable) or ``"orientation"``
    (the chains towards ``other`` and ``other2`` cannot share one order of
    class ``cls``; ``vertices`` = the conflicting pairs).
    """

    reason: str
    cls: int
    other: int | None = None
    other2: int | None = None
    vertices: tuple[int, ...] = ()


def as_masks(g: Graph, partition: Sequence[Iterable[int]]) -> list[int]:
    masks = []
    seen = 0
    for part in partition:
        m = 0
        for v in part:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} is not in the graph")
            if (seen | m) >> v & 1:
                raise ValueError(f"vertex {v} appears twice in the partition")
            m |= 1 << v
        seen |= m
        masks.append(m)
    if seen != g.vertex_mask:
        missing = sorted(bits(g.vertex_mask & ~seen))
        raise ValueError(f"partition misses vertices {missing}")
    if not masks:
        raise ValueError("partition needs at least one class")
    return masks


def _mixed_witness(g: Graph, m: int) -> tuple[int, ...]:
    vs = list(bits(m))
    edge = next((u, v) for u in vs for v in vs if u < v and g.has_edge(u, v))
    non = next((u, v) for u in vs for v in vs if u < v and not g.has_edge(u, v))
    return edge + non


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def check_neighborhood_ordering(g: Graph, partition: Sequence[Iterable[int]]) -> OrderingCertificate | OrderingFailure:
    masks = as_masks(g, partition)
    adj = g.adj

    cliques = []
    for i, m in enumerate(masks, start=1):
        if m.bit_count() >= 2 and g.is_clique(m):
            cliques.append(True)
        elif g.is_independent(m):
            cliques.append(False)
        else:
            return OrderingFailure("mixed-part", i, vertices=_mixed_witness(g, m))

    directions: dict[tuple[int, int], str] = {}
    flexible = set()
    psi = []
    for i, mi in enumerate(masks, start=1):
        members = list(bits(mi))
        sizes: dict[int, dict[int, int]] = {}
        varying = []
        for j, mj in enumerate(masks, start=1):
            if j == i:
                continue
            size = {u: (adj[u] & mj).bit_count() for u in members}
            by_size = sorted(members, key=lambda u: -size[u])
            for a, b in zip(by_size, by_size[1:]):
                if adj[b] & mj & ~adj[a]:
                    return OrderingFailure("incomparable", i, j, vertices=(a, b))
            total = mj.bit_count()
            if not members or not total or all(size[u] == 0 for u in members):
                directions[(i, j)] = EMPTY
            elif all(size[u] == total for u in members):
                directions[(i, j)] = FULL
            elif len(set(size.values())) == 1:
                directions[(i, j)] = DESCENDING
                flexible.add((i, j))
            else:
                sizes[j] = size
                varying.append(j)

        # orientation of each varying j relative to the first one: +1 keeps, -1 reverses
        relation: dict[tuple[int, int], int] = {}
        for x, j in enumerate(varying):
            for j2 in varying[x + 1:]:
                seen_same = seen_rev = None
                for a in members:
                    for b in members:
                        if a >= b:
                            continue
                        s1 = _sign(sizes[j][a] - sizes[j][b])
                        s2 = _sign(sizes[j2][a] - sizes[j2][b])
                        if s1 and s2:
                            if s1 == s2:
                                seen_same = seen_same or (a, b)
                            else:
                                seen_rev = seen_rev or (a, b)
                if seen_same and seen_rev:
                    return OrderingFailure("orientation", i, j, j2, vertices=seen_same + seen_rev)
                # two non-constant chains always share some strictly ordered pair
                relation[(j, j2)] = relation[(j2, j)] = 1 if seen_same else -1

        orient: dict[int, int] = {}
        for j in varying:
            if j in orient:
                continue
            orient[j] = 1
            stack = [j]
            while stack:
                a = stack.pop()
                for b in varying:
                    if b == a or (a, b) not in relation:
                        continue
                    want = orient[a] * relation[(a, b)]
                    if b not in orient:
                        orient[b] = want
                        stack.append(b)
                    elif orient[b] != want:
                        return OrderingFailure("orientation", i, a, b)

        # +1 = neighbourhood shrinks along psi
        order = sorted(members, key=lambda u: (tuple(-orient[j] * sizes[j][u] for j in varying), u))
        for j in varying:
            directions[(i, j)] = DESCENDING if orient[j] == 1 else ASCENDING
            mj = masks[j - 1]
            for a, b in zip(order, order[1:]):
                na, nb = adj[a] & mj, adj[b] & mj
                ok = (nb & ~na == 0) if orient[j] == 1 else (na & ~nb == 0)
                if not ok:
                    return OrderingFailure("orientation", i, j, vertices=(a, b))
        psi.append(tuple(order))

    return OrderingCertificate(
        parts=tuple(tuple(bits(m)) for m in masks),
        cliques=tuple(cliques),
        psi=tuple(psi),
        directions=directions,
        flexible=frozenset(flexible),
    )


def partition_masks(cert: OrderingCertificate) -> list[int]:
    return [mask_of(p) for p in cert.parts]
