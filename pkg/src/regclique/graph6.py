"""graph6 reader/writer.

Format: an optional ``>>graph6<<`` header, then the vertex count N(n), then the
upper triangle ``x(0,1), x(0,2), x(1,2), x(0,3), ...`` (column by column)
packed six bits per byte, most significant first, each byte offset by 63 and
the last one zero-padded.  N(n) is ``chr(n + 63)`` for n <= 62, ``~`` plus
three bytes for n <= 258047, and ``~~`` plus six bytes beyond that.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"graph6 parse error at byte {position}: {message}")
        self.position = position


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def emit_graph6(g: Graph, header: bool = False) -> str:
    out = [HEADER] if header else []
    out.append(_encode_n(g.n))
    value = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(value + 63))
                value = nbits = 0
    if nbits:
        out.append(chr((value << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    start = 0
    if line.startswith(HEADER):
        start = len(HEADER)
    data = line[start:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", start + i)
    if not data:
        raise Graph6Error("truncated: missing vertex count", start)

    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated: incomplete 8-byte vertex count", start + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated: incomplete 4-byte vertex count", start + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    if n < 1:
        raise Graph6Error("graph has no vertices", start)

    total_bits = n * (n - 1) // 2
    need = (total_bits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated: expected {need} data bytes, found {len(body)}", start + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing data after adjacency bits", start + pos + need)
    pad = need * 6 - total_bits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", start + len(vals) - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(stream: TextIO) -> Iterator[Graph]:
    """Parse one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield parse_graph6(line)
