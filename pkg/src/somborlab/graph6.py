"""graph6 and DOT serialization for :class:`~somborlab.graphs.Graph`.

The graph6 encoder is bit-exact against the published format definition:
an order field (one byte for orders up to 62, a ``~``-prefixed 18-bit field
above) followed by the upper triangle of the adjacency matrix in column
order, packed into 6-bit printable characters.
"""

from __future__ import annotations

from .graphs import Graph, _columns_of, _graph6_pack

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode ``g`` exactly as labeled (no canonicalization)."""
    return _graph6_pack(g.order, _columns_of(g._rows, g.order)).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    """Decode a graph6 string, tolerating the optional ``>>graph6<<`` header."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ValueError(f"invalid graph6 characters in {s!r}")
    if data[0] == 63:  # '~' marker: 18-bit order
        if len(data) < 4:
            raise ValueError("truncated graph6 order field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for order {n}"
        )
    g = Graph(n) if n else Graph(1)
    bit = 0
    for group in body:
        for shift in range(5, -1, -1):
            if bit >= nbits:
                break
            if group >> shift & 1:
                u, v = _pair_at(bit)
                g.add_edge(u, v)
            bit += 1
    return g


def _pair_at(bit: int) -> tuple[int, int]:
    # upper triangle in column order: columns v = 1, 2, ... of lengths 1, 2, ...
    v = 1
    while bit >= v:
        bit -= v
        v += 1
    return bit, v


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT rendering with per-vertex degree labels."""
    lines = [f'graph "{name}" {{']
    for v in range(g.order):
        lines.append(f'  {v} [label="{v} (deg {g.degree(v)})"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
