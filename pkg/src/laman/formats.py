"""Text formats: edge lists, paired edge lists for bigraphs, and graph6."""

from __future__ import annotations

from .graph import Bigraph, GraphError, MultiGraph, sort_ids


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def _edge_lines(lines, first_lineno: int):
    pairs = []
    for k, raw in enumerate(lines):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", first_lineno + k)
        pairs.append((_token(parts[0]), _token(parts[1])))
    return pairs


def parse_edge_list(text: str) -> MultiGraph:
    """One ``u v`` per line; ``#`` starts a comment. Edge ids are 0, 1, ... in file order."""
    return MultiGraph.from_edges(_edge_lines(text.splitlines(), 1))


def parse_bigraph(text: str) -> Bigraph:
    """Two edge-list blocks separated by a ``---`` line; the k-th edges are paired."""
    lines = text.splitlines()
    seps = [i for i, ln in enumerate(lines) if ln.strip() == "---"]
    if len(seps) != 1:
        raise ParseError("a bigraph needs exactly one '---' separator line")
    s = seps[0]
    g = _edge_lines(lines[:s], 1)
    h = _edge_lines(lines[s + 1:], s + 2)
    if len(g) != len(h):
        raise ParseError(f"blocks have {len(g)} and {len(h)} edges; they must match")
    return Bigraph(MultiGraph.from_edges(g), MultiGraph.from_edges(h))


def _pair_text(g: MultiGraph) -> list[str]:
    out = []
    for e in sort_ids(g.edges):
        ends = g.endpoints(e)
        out.append(f"{ends[0]} {ends[-1]}")
    return out


def emit_edge_list(g: MultiGraph) -> str:
    return "".join(line + "\n" for line in _pair_text(g))


def emit_bigraph(b: Bigraph) -> str:
    return emit_edge_list(b.g) + "---\n" + emit_edge_list(b.h)


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: MultiGraph) -> str:
    """graph6 string of a simple graph; vertices are numbered in sorted order."""
    if not g.is_simple():
        raise GraphError("graph6 encodes simple graphs only")
    verts = sort_ids(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = {frozenset(index[x] for x in ends) for ends in g.edges.values()}
    bits = [1 if frozenset((i, j)) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _encode_n(n) + body


def parse_graph6(text: str) -> MultiGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError("invalid graph6 string")
    data = [ord(c) - 63 for c in s]
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    bits = [(d >> s) & 1 for d in rest for s in range(5, -1, -1)]
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return MultiGraph.from_edges(pairs, vertices=range(n))


def sniff(text: str) -> str:
    """Guess ``bigraph``, ``graph6`` or ``edges`` from the content."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if "---" in lines:
        return "bigraph"
    if len(lines) == 1 and " " not in lines[0] and "\t" not in lines[0]:
        return "graph6"
    return "edges"


def parse_graph(text: str, fmt: str = "auto"):
    """Parse ``text`` as an edge list, graph6 or bigraph; returns MultiGraph or Bigraph."""
    fmt = sniff(text) if fmt == "auto" else fmt
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "bigraph":
        return parse_bigraph(text)
    raise ParseError(f"unknown input format {fmt!r}")
