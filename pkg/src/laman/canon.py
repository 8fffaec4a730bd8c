"""Canonical labeling of small vertex-colored graphs.

Colour refinement to an equitable ordered partition, then individualization
of the first smallest non-singleton cell, keeping the lexicographically least
leaf certificate. Automorphisms discovered from equal leaves prune sibling
branches in the same orbit of the current pointwise stabilizer.

The same routine backs two keys: one for simple graphs (used to dedup the
enumeration) and one for bigraphs (used to memoize the Laman recursion).
"""

from __future__ import annotations

from typing import Sequence

from .graph import Bigraph, MultiGraph, sort_ids


def _refine(cells: list[list[int]], adj: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    cell_of = [0] * n
    while True:
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted(cell_of[w] for w in adj[v])) for v in cell}
            groups: dict = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _orbits(gens: list[tuple], n: int) -> list[int]:
    rep = list(range(n))

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                rep[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_form(colors: Sequence, adj: Sequence[Sequence[int]]) -> tuple[tuple, list[int]]:
    """Return ``(certificate, labeling)`` for a vertex-colored simple graph.

    ``colors[v]`` must be mutually comparable; ``adj[v]`` lists neighbors of v.
    ``labeling[v]`` is the canonical position of v. Two inputs receive equal
    certificates iff they are isomorphic by a color-preserving map.
    """
    n = len(colors)
    if n == 0:
        return ((), ()), []
    by_color: dict = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    color_seq = tuple(sorted(colors))
    init = [by_color[c] for c in sorted(by_color)]
    edges = [(u, w) for u in range(n) for w in adj[u] if u < w]

    best: list = [None, None]  # certificate, labeling
    autos: list[tuple] = []

    def certificate(cells):
        lab = [0] * n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        cert = tuple(sorted((min(lab[u], lab[w]), max(lab[u], lab[w])) for u, w in edges))
        return cert, lab

    def search(cells, fixed: list[int]):
        cells = _refine(cells, adj, n)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            cert, lab = certificate(cells)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, lab
            elif cert == best[0]:
                # lab^-1 . best_lab is an automorphism
                inv = [0] * n
                for v, p in enumerate(lab):
                    inv[p] = v
                autos.append(tuple(inv[best[1][v]] for v in range(n)))
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                stab = [g for g in autos if all(g[x] == x for x in fixed)]
                if stab:
                    orb = _orbits(stab, n)
                    if any(orb[v] == orb[u] for u in tried):
                        continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(child, fixed + [v])

    search(init, [])
    return (color_seq, best[0]), best[1]


def graph_certificate(g: MultiGraph) -> tuple:
    """Isomorphism-invariant certificate of a simple graph."""
    verts = sort_ids(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[int]] = [[] for _ in verts]
    for ends in g.edges.values():
        if len(ends) != 2:
            raise ValueError("graph_certificate expects a simple graph")
        a, b = (index[x] for x in ends)
        adj[a].append(b)
        adj[b].append(a)
    cert, _ = canonical_form([0] * len(verts), adj)
    return cert


def canonical_graph(g: MultiGraph) -> MultiGraph:
    """Relabel a simple graph to its canonical form on vertices 0..n-1."""
    verts = sort_ids(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[int]] = [[] for _ in verts]
    for ends in g.edges.values():
        a, b = (index[x] for x in ends)
        adj[a].append(b)
        adj[b].append(a)
    (_, cert), _ = canonical_form([0] * len(verts), adj)
    return MultiGraph.from_edges(cert, vertices=range(len(verts)))


def core_certificate(edges: Sequence[tuple], swap_closure: bool = False) -> tuple:
    """Certificate of a bigraph given as ``(g0, g1, h0, h1)`` rows on int vertices.

    Biedges with identical endpoints on both sides are merged into one node
    carrying their multiplicity, which keeps the search tree small.
    """
    cert = _core_cert(edges)
    if swap_closure:
        swapped = _core_cert([(c, d, a, b) for a, b, c, d in edges])
        cert = min(cert, swapped)
    return cert


def _core_cert(edges) -> tuple:
    gv: dict = {}
    hv: dict = {}
    mult: dict = {}
    for a, b, c, d in edges:
        ga, gb = (a, b) if a <= b else (b, a)
        hc, hd = (c, d) if c <= d else (d, c)
        key = (ga, gb, hc, hd)
        mult[key] = mult.get(key, 0) + 1
        for x in (ga, gb):
            gv.setdefault(x, len(gv))
        for x in (hc, hd):
            hv.setdefault(x, len(hv))
    ng, nh = len(gv), len(hv)
    n = ng + nh + len(mult)
    colors: list = [(0, 0, 0, 0)] * ng + [(1, 0, 0, 0)] * nh
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, ((ga, gb, hc, hd), k) in enumerate(sorted(mult.items())):
        node = ng + nh + i
        colors.append((2, k, int(ga == gb), int(hc == hd)))
        for x in {gv[ga], gv[gb]}:
            adj[node].append(x)
            adj[x].append(node)
        for y in {hv[hc], hv[hd]}:
            adj[node].append(ng + y)
            adj[ng + y].append(node)
    cert, _ = canonical_form(colors, adj)
    return cert


def to_core(b: Bigraph) -> tuple[list[tuple], list]:
    """Integer rows ``(g0, g1, h0, h1)`` for a bigraph, plus the biedge order used."""
    gidx = {v: i for i, v in enumerate(sort_ids(b.g.vertices))}
    hidx = {v: i for i, v in enumerate(sort_ids(b.h.vertices))}
    order = sort_ids(b.biedges)
    rows = []
    for e in order:
        ge = b.g.endpoints(e)
        he = b.h.endpoints(e)
        g0, g1 = gidx[ge[0]], gidx[ge[-1]]
        h0, h1 = hidx[he[0]], hidx[he[-1]]
        rows.append((g0, g1, h0, h1))
    return rows, order


def canonical_key(b: Bigraph, swap_closure: bool = False) -> bytes:
    """Deterministic isomorphism-invariant byte key of a bigraph.

    With ``swap_closure`` the key is also invariant under exchanging the sides.
    """
    rows, _ = to_core(b)
    iso_g = len(b.g.vertices) - len(set().union(*b.g.edges.values()))
    iso_h = len(b.h.vertices) - len(set().union(*b.h.edges.values()))
    key = (iso_g, iso_h, _core_cert(rows))
    if swap_closure:
        swapped = (iso_h, iso_g, _core_cert([(c, d, a, b_) for a, b_, c, d in rows]))
        key = min(key, swapped)
    return repr(key).encode()
