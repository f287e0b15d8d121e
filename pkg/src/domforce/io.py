"""graph6, edge-list and DOT serialisation."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"graph6 byte out of range in {text!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise GraphError(f"malformed graph6 header in {text!r}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("non-zero padding bits in graph6 body")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-based). An optional ``n N`` line fixes the order,
    otherwise it is one more than the largest index seen."""
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: repeated edge {key}")
        seen.add(key)
        edges.append(key)
    if n is None:
        n = 1 + max((v for e in edges for v in e), default=-1)
    for u, v in edges:
        if v >= n:
            raise GraphError(f"edge ({u}, {v}) has index >= n={n}")
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Load a graph from a file: graph6 if the first line parses as one, else edge list."""
    text = Path(path).read_text()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if first and " " not in first.strip():
        return from_graph6(first)
    return from_edge_list(text)
