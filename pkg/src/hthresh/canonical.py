"""Canonical keys for partitioned graphs at desk scale.

Colour refinement seeded with the vertex classes, then individualisation
over the first non-trivial cell. Branches on vertices that are twins of an
already tried vertex are skipped: the transposition of two twins in the same
cell is an automorphism of the coloured graph, so their subtrees produce the
same certificates.
"""

from __future__ import annotations

from .graphs import Graph, PartitionedGraph, bits

DEFAULT_LIMIT = 12


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    while True:
        new_cells = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def canonical_order(adj: tuple[int, ...], classes: tuple[int, ...]) -> list[int]:
    """Vertex order whose relabelled adjacency is the canonical one."""
    n = len(adj)
    if n == 0:
        return []
    cells_by_class: dict[int, int] = {}
    for v, c in enumerate(classes):
        cells_by_class[c] = cells_by_class.get(c, 0) | 1 << v
    start = [cells_by_class[c] for c in sorted(cells_by_class)]

    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_cert, best_order
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(adj, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            return
        tried: list[int] = []
        for v in bits(cell):
            av = adj[v]
            if any((av & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:])

    search(start)
    return best_order


def canonical_form(t: PartitionedGraph, limit: int = DEFAULT_LIMIT) -> tuple[bytes, list[int]]:
    """Return ``(key, order)``; ``order[i]`` is the vertex placed at position ``i``."""
    n = t.n
    if n > limit:
        raise ValueError(f"canonical keys are limited to {limit} vertices, got {n}")
    order = canonical_order(t.graph.adj, t.classes)
    cert = _certificate(t.graph.adj, order)
    packed = 0
    for i, row in enumerate(cert):
        packed = packed << i | (row & ((1 << i) - 1))
    nbytes = (n * (n - 1) // 2 + 7) // 8
    key = bytes([n, t.k]) + bytes(t.classes[v] for v in order) + packed.to_bytes(nbytes, "big")
    return key, order


def canonical_key(t: PartitionedGraph, limit: int = DEFAULT_LIMIT) -> bytes:
    """Equal keys iff the partitioned graphs are isomorphic preserving classes."""
    return canonical_form(t, limit)[0]


def graph_key(g: Graph, limit: int = DEFAULT_LIMIT) -> bytes:
    return canonical_key(PartitionedGraph.uniform(g), limit)


def canonical_graph(g: Graph, limit: int = DEFAULT_LIMIT) -> Graph:
    """The canonical relabelling of ``g`` (isomorphic graphs map to equal values)."""
    _, order = canonical_form(PartitionedGraph.uniform(g), limit)
    return g.relabel(order)


def canonical_partitioned(t: PartitionedGraph, limit: int = DEFAULT_LIMIT) -> PartitionedGraph:
    _, order = canonical_form(t, limit)
    return t.induced(order)
