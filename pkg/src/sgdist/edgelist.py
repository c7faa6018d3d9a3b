"""Plain-text edge-list serialization.

Format: a header line ``n m``, then m lines ``u v s`` with 1-based vertex
labels and a sign token ``+``, ``-``, ``+1`` or ``-1``.  Blank lines and
lines starting with ``#`` are ignored.  Writing always emits ``+``/``-``.
"""

from __future__ import annotations

from .core import SignedGraph
from .errors import BadSignError, ParseError

_SIGN_TOKENS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


def parse_edge_list(text: str) -> SignedGraph:
    """Parse an edge-list document into a SignedGraph."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("empty document")

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must be two integers") from None
    if n < 1 or m < 0:
        raise ParseError(f"line {lineno}: bad header values n={n} m={m}")

    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but document has {len(body)}")

    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: edge line must be 'u v s', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex labels must be integers") from None
        token = parts[2]
        if token not in _SIGN_TOKENS:
            raise BadSignError(f"line {lineno}: bad sign token {token!r}")
        edges.append((u, v, _SIGN_TOKENS[token]))

    return SignedGraph(n, edges)


def format_edge_list(g: SignedGraph) -> str:
    """Serialize a SignedGraph; inverse of parse_edge_list up to sign spelling."""
    lines = [f"{g.n} {g.m}"]
    for u, v, s in g.edges:
        lines.append(f"{u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n"


def load_edge_list(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def dump_edge_list(g: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
