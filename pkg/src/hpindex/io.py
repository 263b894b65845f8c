"""Reading and writing graphs: edge-list text, graph6, DOT."""

from __future__ import annotations

import re

from .errors import EdgeListParseError, ValidationError
from .graphs import Graph

TOKEN_RE = re.compile(r"[A-Za-z0-9_.-]+\Z")


def from_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    One edge per line as two whitespace-separated tokens; ``v TOKEN`` declares
    an isolated vertex; ``#`` starts a comment. Duplicate edges collapse
    silently, self-loops are rejected. Vertices appear in first-mention order.
    """
    order: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []

    def vertex(tok: str) -> int:
        if tok not in order:
            order[tok] = len(order)
        return order[tok]

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise EdgeListParseError(line_no, "vertex line must be 'v TOKEN'")
            if not TOKEN_RE.match(parts[1]):
                raise EdgeListParseError(line_no, f"bad vertex token {parts[1]!r}")
            vertex(parts[1])
            continue
        if len(parts) != 2:
            raise EdgeListParseError(
                line_no, f"expected two tokens, got {len(parts)}")
        for tok in parts:
            if not TOKEN_RE.match(tok):
                raise EdgeListParseError(line_no, f"bad vertex token {tok!r}")
        if parts[0] == parts[1]:
            raise EdgeListParseError(line_no, f"self-loop at {parts[0]!r}")
        pairs.append((vertex(parts[0]), vertex(parts[1])))

    return Graph(tuple(order), pairs)


def to_edge_list(g: Graph) -> str:
    """Serialize to edge-list text. Deterministic: edges sorted by token pair."""
    lines = []
    isolated = sorted(g.labels[v] for v in range(g.n) if g.degree(v) == 0)
    lines.extend(f"v {tok}" for tok in isolated)
    lines.extend(f"{a} {b}" for a, b in g.label_edges())
    return "\n".join(lines) + ("\n" if lines else "")


_G6_HEADER = ">>graph6<<"


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 line (optional ``>>graph6<<`` header)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise EdgeListParseError(
            max(1, len(lines)), f"expected exactly one graph6 line, got {len(lines)}")
    line = lines[0]
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    data = [ord(c) - 63 for c in line]
    if any(d < 0 or d > 63 for d in data):
        raise EdgeListParseError(1, "graph6 characters must be in the range 63..126")
    if not data:
        raise EdgeListParseError(1, "empty graph6 line")

    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise EdgeListParseError(1, "unsupported graph6 size prefix")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]

    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise EdgeListParseError(1, "graph6 body has the wrong length")
    bits = []
    for d in body:
        for k in range(5, -1, -1):
            bits.append((d >> k) & 1)
    pairs = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                pairs.append((i, j))
            pos += 1
    if any(bits[nbits:]):
        raise EdgeListParseError(1, "nonzero padding bits in graph6 body")
    return Graph(tuple(str(i) for i in range(n)), pairs)


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (vertex order = construction order)."""
    n = g.n
    if n > 258047:
        raise ValidationError("graph too large for this graph6 encoder")
    if n <= 62:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    eset = set(g.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val)
    return "".join(chr(d + 63) for d in head + body)


def _dot_quote(tok: str) -> str:
    return '"' + tok.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    """Render as an undirected DOT graph."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.degree(v) == 0:
            lines.append(f"  {_dot_quote(g.labels[v])};")
    for a, b in g.label_edges():
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
