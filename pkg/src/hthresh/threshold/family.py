"""Families of in/out-neighbourhood pairs, the slot graph R(S) and its realisations.

Slot ``X^i_q`` (class ``i``, ``q`` in {1, 2}) is vertex ``2*(i-1) + (q-1)`` of
the slot graph. A proper 2-colouring of the slot graph is turned into a
digraph by reading colour 0 as "out-neighbourhood".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from ..digraph_algos import two_color_bipartite
from ..graphs import Digraph, Graph
from .ordering import ASCENDING, DESCENDING, OrderingCertificate


@dataclass(frozen=True)
class Family:
    """``sets[i-1] == (X^i_1, X^i_2)``, each a frozenset of 1-based class ids."""

    sets: tuple[tuple[frozenset[int], frozenset[int]], ...]

    @property
    def k(self) -> int:
        return len(self.sets)

    def union(self, i: int) -> frozenset[int]:
        a, b = self.sets[i - 1]
        return a | b

    def is_proper(self) -> bool:
        return all(i in self.union(j) for i in range(1, self.k + 1) for j in self.union(i))


class Realization(NamedTuple):
    digraph: Digraph | None
    odd_cycle: list[tuple[int, int]] | None  # slots as (class, q)


def slot(i: int, q: int) -> int:
    return 2 * (i - 1) + (q - 1)


def slot_name(s: int) -> tuple[int, int]:
    return s // 2 + 1, s % 2 + 1


def build_family(cert: OrderingCertificate) -> Family:
    sets = []
    for i in range(1, cert.k + 1):
        down = frozenset(j for j in range(1, cert.k + 1) if j != i and cert.directions[(i, j)] == DESCENDING)
        up = frozenset(j for j in range(1, cert.k + 1) if j != i and cert.directions[(i, j)] == ASCENDING)
        sets.append((down, up))
    return Family(tuple(sets))


def family_of_digraph(d: Digraph) -> Family:
    """The family ``({N_in(i), N_out(i)})`` realised by ``d``, out-set first."""
    return Family(tuple(
        (frozenset(j + 1 for j in d.out_neighbors(i)), frozenset(j + 1 for j in d.in_neighbors(i)))
        for i in range(d.n)
    ))


def build_R(s: Family) -> Graph:
    if not s.is_proper():
        raise ValueError("family is not proper")
    edges = set()
    for i in range(1, s.k + 1):
        edges.add((slot(i, 1), slot(i, 2)))
        for j in range(i + 1, s.k + 1):
            for q in (1, 2):
                for p in (1, 2):
                    if i in s.sets[j - 1][p - 1] and j in s.sets[i - 1][q - 1]:
                        edges.add((slot(i, q), slot(j, p)))
    return Graph.from_edges(2 * s.k, edges)


def _digraph_from_coloring(s: Family, colors: list[int]) -> Digraph:
    arcs = set()
    for i in range(1, s.k + 1):
        for q in (1, 2):
            if colors[slot(i, q)] == 0:
                for j in s.sets[i - 1][q - 1]:
                    arcs.add((i - 1, j - 1))
    return Digraph(s.k, frozenset(arcs))


def realize_family(s: Family) -> Realization:
    """A digraph ``D`` with ``{N_in(i), N_out(i)} == {X^i_1, X^i_2}`` for all ``i``."""
    coloring = two_color_bipartite(build_R(s))
    if coloring.colors is None:
        return Realization(None, [slot_name(v) for v in coloring.odd_cycle])
    return Realization(_digraph_from_coloring(s, coloring.colors), None)


def realizes(d: Digraph, s: Family) -> bool:
    if d.n != s.k:
        return False
    for i in range(1, s.k + 1):
        if d.has_loop(i - 1):
            return False
        out = frozenset(j + 1 for j in d.out_neighbors(i - 1))
        inn = frozenset(j + 1 for j in d.in_neighbors(i - 1))
        x1, x2 = s.sets[i - 1]
        if (out, inn) != (x1, x2) and (out, inn) != (x2, x1):
            return False
    return True


def all_realizations(s: Family) -> list[Digraph]:
    """Every realisation, one per colour choice on each component of R(S)."""
    r = build_R(s)
    base = two_color_bipartite(r).colors
    if base is None:
        return []
    comp = _components(r)
    roots = sorted(set(comp))
    found = {}
    for flips in itertools.product((0, 1), repeat=len(roots)):
        flip_of = dict(zip(roots, flips))
        colors = [c ^ flip_of[comp[v]] for v, c in enumerate(base)]
        d = _digraph_from_coloring(s, colors)
        found[d.arcs] = d
    return [found[a] for a in sorted(found, key=lambda arcs: sorted(arcs))]


def _components(g: Graph) -> list[int]:
    comp = [-1] * g.n
    for root in range(g.n):
        if comp[root] != -1:
            continue
        comp[root] = root
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if comp[w] == -1:
                    comp[w] = root
                    stack.append(w)
    return comp
