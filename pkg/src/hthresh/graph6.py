"""graph6 encoding and decoding (the nauty/networkx wire format)."""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Input text does not follow one of the package's file formats."""


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph, header: bool = False) -> str:
    out = [HEADER] if header else []
    out.append(_encode_size(g.n))
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    word = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            word = word << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(word + 63))
                word = nbits = 0
    if nbits:
        out.append(chr((word << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; the ``>>graph6<<`` header is optional."""
    data = text.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    values = []
    for pos, ch in enumerate(data):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"byte {code!r} at position {pos} is outside 63..126")
        values.append(code - 63)

    if values[0] < 63:
        n, rest = values[0], values[1:]
    elif len(values) >= 2 and values[1] < 63:
        if len(values) < 4:
            raise FormatError("truncated length header")
        n = values[1] << 12 | values[2] << 6 | values[3]
        rest = values[4:]
        if n <= 62:
            raise FormatError("non-minimal length header")
    else:
        if len(values) < 8:
            raise FormatError("truncated length header")
        n = 0
        for v in values[2:8]:
            n = n << 6 | v
        rest = values[8:]
        if n <= 258047:
            raise FormatError("non-minimal length header")

    total = n * (n - 1) // 2
    expected = (total + 5) // 6
    if len(rest) != expected:
        raise FormatError(f"expected {expected} data bytes for {n} vertices, got {len(rest)}")
    word = 0
    for v in rest:
        word = word << 6 | v
    pad = expected * 6 - total
    if word & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    word >>= pad

    adj = [0] * n
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if word >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))
