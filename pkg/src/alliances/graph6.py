"""graph6 encoding and decoding (McKay's format).

The body is the upper triangle of the adjacency matrix in column-major
order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into 6-bit
groups, each offset by 63.
"""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n = {n}")


def emit_graph6(graph: Graph, header: bool = False) -> str:
    n = graph.n
    bits = [1 if graph.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; errors report the offending byte offset."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", base + i)
    if not s:
        raise Graph6Error("empty graph6 string", base)

    def chunk(i: int) -> int:
        return ord(s[i]) - 63

    if s[0] != "~":
        n, pos = chunk(0), 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("truncated 8-byte vertex count header", base + len(s))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | chunk(i)
        pos = 8
    else:
        if len(s) < 4:
            raise Graph6Error("truncated 4-byte vertex count header", base + len(s))
        n = (chunk(1) << 12) | (chunk(2) << 6) | chunk(3)
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have < need:
        raise Graph6Error(f"truncated bit stream: expected {need} data bytes, found {have}", base + len(s))
    if have > need:
        raise Graph6Error(f"{have - need} trailing bytes after the bit stream", base + pos + need)

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if chunk(pos + bit // 6) >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return Graph(n, edges)
