"""graph6 codec (single-byte size form, orders 0..62).

The format is one byte n+63 followed by the upper-triangle adjacency
bits in column order x(0,1); x(0,2), x(1,2); x(0,3), ...; zero-padded to
a multiple of six, each six-bit group offset by 63 into ASCII 63..126.
"""

from __future__ import annotations

from .graphs import DomainError, Graph, make_graph

GRAPH6_MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; the message carries the byte offset."""


def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise DomainError(
            f"graph6 single-byte form covers orders up to {GRAPH6_MAX_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    group = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            group = (group << 1) | ((g.adj[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    line = line.strip()
    if not line:
        raise Graph6Error("empty graph6 line (offset 0)")
    first = ord(line[0])
    if not 63 <= first <= 126:
        raise Graph6Error(f"byte {first} out of graph6 range at offset 0")
    if first == 126:
        raise Graph6Error("extended size forms are not supported (offset 0)")
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    if len(line) != 1 + need:
        raise Graph6Error(
            f"expected {1 + need} bytes for order {n}, got {len(line)} "
            f"(offset {min(len(line), 1 + need)})")
    bits = []
    for pos, ch in enumerate(line[1:], start=1):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} out of graph6 range at offset {pos}")
        group = code - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error(f"nonzero padding bits (offset {1 + idx // 6})")
    return make_graph(n, edges)
