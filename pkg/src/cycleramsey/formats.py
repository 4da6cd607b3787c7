"""Plain edge-list and graph6 encodings.

Edge-list text: a header line ``"n m"`` followed by ``m`` lines ``"u v"``
with 0-based labels, ``u < v``, pairs in ascending order.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ParseError("empty edge list")
    try:
        head = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(head) != 2:
        raise ParseError("header must be 'n m'")
    n, m = head
    if any(len(r) != 2 for r in body):
        raise ParseError("edge lines must hold exactly two labels")
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    try:
        return Graph(n, body)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s or any(not (63 <= ord(c) <= 126) for c in s):
        raise ParseError("not a graph6 string")
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        raise ParseError("truncated graph6 size field")
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    bits = [(v >> (5 - k)) & 1 for v in rest for k in range(6)]
    if any(bits[need:]):
        raise ParseError("non-zero graph6 padding")
    edges, pos = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def read_graph(text: str) -> Graph:
    """Parse either format, guessing from the first non-blank line."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    tokens = first.split()
    if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
        return from_edgelist(text)
    if len(tokens) == 1:
        return from_graph6(tokens[0])
    raise ParseError("unrecognised graph format")
