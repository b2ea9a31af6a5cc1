"""graph6 encoding/decoding (McKay's format) and DOT export.

Only the undirected graph6 dialect is supported, with the optional
``>>graph6<<`` header accepted on input.  Encoding is canonical for a
labeled graph: round-tripping a string produced here is the identity.
"""

from __future__ import annotations

from typing import Optional

from .errors import Graph6ParseError
from .graph import Graph
from .klein import COLOR_NAMES

_HEADER = ">>graph6<<"
_MAX_N = 68719476735  # largest vertex count the size prefix can carry


def _size_prefix(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    return [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    if g.n > _MAX_N:
        raise ValueError("graph too large for graph6")
    out = _size_prefix(g.n)
    adj = set(g.edges)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if (i, j) in adj else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(chr(b) for b in out)


def decode_graph6(text: str) -> Graph:
    """Parse a graph6 string.  Malformed input raises Graph6ParseError
    with the byte offset of the problem."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    data = []
    for pos, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", pos)
        data.append(b - 63)
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise Graph6ParseError("truncated size prefix", len(s))
    if n == 0:
        raise Graph6ParseError("zero-vertex graph not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} data bytes for n={n}, got {len(body)}", len(s)
        )
    bits = []
    for d in body:
        bits.extend((d >> k) & 1 for k in range(5, -1, -1))
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits[t]:
                edges.append((i, j))
            t += 1
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, coloring: Optional[dict[int, int]] = None, name: str = "G") -> str:
    """Render as DOT.  ``coloring`` maps edge index -> color element and
    becomes the DOT ``color`` attribute (a/b/c drawn red/green/blue)."""
    palette = {1: "red", 2: "green", 3: "blue"}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        attr = ""
        if coloring is not None and i in coloring:
            col = coloring[i]
            attr = f' [color={palette[col]} label={COLOR_NAMES[col]}]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
