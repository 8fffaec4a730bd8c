"""Reference graphs and published counts.

``EXTREMAL`` holds, for 6 <= n <= 12, a Laman graph with the largest Laman
number on n vertices (vertices a, b, c, ... numbered 1, 2, 3, ...).
"""

from __future__ import annotations

from .graph import MultiGraph


def _letters(s: str) -> list[tuple[int, int]]:
    return [(ord(x) - 96, ord(y) - 96) for x, y in s.split()]


EXTREMAL_EDGES = {
    6: _letters("ab ac ad bc be cf de df ef"),
    7: _letters("ab ac ad ae bc bf cg de df eg fg"),
    8: _letters("ac ad ae af bc bd bg bh ce dg eh fg fh"),
    9: _letters("ab ad ae ah bf bg bi cd ce cf cg dh ei fh gi"),
    10: _letters("ab ae ag ah bf bi bj ce cf cg ci de df dh dj gi hj"),
    11: _letters("ab af ag aj bf bh bk cd cg ci cj dh di dk ef eg eh ei jk"),
    12: _letters("ab ag ah ai bj bk bl cd cg ch cj di dk dl ef eg ei ek fh fj fl"),
}

MAX_LAMAN = {6: 24, 7: 56, 8: 136, 9: 344, 10: 880, 11: 2288, 12: 6180}
MIN_LAMAN = {n: 2 ** (n - 2) for n in range(6, 13)}

LAMAN_GRAPH_COUNTS = {
    2: 1, 3: 1, 4: 1, 5: 3, 6: 13, 7: 70, 8: 608, 9: 7222,
    10: 110132, 11: 2039273, 12: 44176717,
}


def extremal_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges(EXTREMAL_EDGES[n])


TRIANGLE = MultiGraph.from_edges([(1, 2), (2, 3), (1, 3)])
# K4 minus an edge, labeled as in the four-vertex example (biedge ids r, g, d, o, b)
FOUR_VERTEX = MultiGraph.from_edges(
    [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)], ids=["r", "g", "d", "o", "b"]
)
K4 = MultiGraph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
