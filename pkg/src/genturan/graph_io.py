"""Bit-exact graph serialization: graph6 and plain edge lists.

graph6 is the standard printable-ASCII encoding: N(n) followed by the
upper-triangle adjacency bits in column order ((0,1), (0,2), (1,2),
(0,3), ...), packed big-endian into 6-bit groups offset by 63.  The
optional ">>graph6<<" header is accepted on input and never written.

The edge-list format is one "u v" pair per line, 0-indexed, blank lines
ignored.  It carries no vertex count, so trailing isolated vertices do
not survive a round trip unless n is passed explicitly when reading.
"""

from __future__ import annotations

from .errors import GraphFormatError, ParameterError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> list[int]:
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ParameterError(f"n={n} too large for graph6")


def to_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = graph.n
    out = _encode_order(n)
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = graph.adjacency_mask(v)
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(acc + 63)
    return "".join(chr(c) for c in out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; the ">>graph6<<" header is optional."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError("graph6 contains bytes outside chr(63)..chr(126)")
    if data[0] != 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 order field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    bits_bytes = data[pos:]
    if len(bits_bytes) != need:
        raise GraphFormatError(
            f"graph6 body has {len(bits_bytes)} groups, expected {need} for n={n}"
        )
    edges = []
    bit_index = 0
    for v in range(1, n):
        for u in range(v):
            group, offset = divmod(bit_index, 6)
            if (bits_bytes[group] >> (5 - offset)) & 1:
                edges.append((u, v))
            bit_index += 1
    return Graph(n, edges)


def to_edgelist(graph: Graph) -> str:
    """One "u v" line per edge, lexicographic order, trailing newline."""
    lines = [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def from_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse an edge list; n defaults to 1 + the largest vertex mentioned."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {raw!r}")
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    elif top >= n:
        raise GraphFormatError(f"edge list mentions vertex {top} but n={n}")
    return Graph(n, edges)


def write_graph(graph: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(graph) + "\n"
    if fmt == "edgelist":
        return to_edgelist(graph)
    raise ParameterError(f"unknown format {fmt!r}")


def read_graph(text: str, fmt: str, n: int | None = None) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text, n=n)
    raise ParameterError(f"unknown format {fmt!r}")
