"""Laman graphs on n vertices up to isomorphism, by Henneberg expansion.

Level n is obtained from level n-1 by applying both Henneberg rules in every
possible way and keeping one representative per canonical form. Graphs are
handled as sorted tuples of ``(i, j)`` pairs on vertices 0..n-1 in canonical
labeling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .canon import canonical_form
from .graph import MultiGraph
from .lamnumber import LamanEngine, LamConfig, MemoTable

DEFAULT_CAP = 10

EdgeTuple = tuple  # sorted tuple of (i, j), i < j


class CapExceeded(ValueError):
    pass


def canonize(n: int, edges) -> EdgeTuple:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    (_, cert), _ = canonical_form([0] * n, adj)
    return cert


def children(n: int, edges: EdgeTuple) -> Iterator[EdgeTuple]:
    """All (non-canonical) Henneberg extensions of a graph on n vertices."""
    t = n
    for u in range(n):
        for v in range(u + 1, n):
            yield edges + ((u, t), (v, t))
    for k, (u, v) in enumerate(edges):
        rest = edges[:k] + edges[k + 1:]
        for w in range(n):
            if w != u and w != v:
                yield rest + ((u, t), (v, t), (w, t))


def _expand_chunk(args) -> list[EdgeTuple]:
    n, parents = args
    seen: dict = {}
    for p in parents:
        for c in children(n, p):
            key = canonize(n + 1, c)
            if key not in seen:
                seen[key] = None
    return list(seen)


@dataclass
class Catalog:
    """Isomorphism classes of Laman graphs on ``n`` vertices (streamed once)."""

    n: int
    graphs: Iterator[EdgeTuple]
    count: int = 0
    _done: bool = field(default=False, repr=False)

    def __iter__(self):
        for g in self.graphs:
            self.count += 1
            yield g
        self._done = True

    def as_multigraphs(self) -> Iterator[MultiGraph]:
        for g in self:
            yield to_multigraph(self.n, g)


def to_multigraph(n: int, edges: EdgeTuple) -> MultiGraph:
    return MultiGraph.from_edges(edges, vertices=range(n))


def _workers(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("LAMAN_THREADS", "1"))
    return max(1, threads)


def _level(n: int, prev: list[EdgeTuple], threads: int) -> Iterator[EdgeTuple]:
    """Stream new canonical graphs on n + 1 vertices in a deterministic order."""
    seen: set = set()
    if threads == 1 or len(prev) < 64:
        for p in prev:
            for c in children(n, p):
                key = canonize(n + 1, c)
                if key not in seen:
                    seen.add(key)
                    yield key
        return
    size = max(1, len(prev) // (threads * 8))
    chunks = [(n, prev[i:i + size]) for i in range(0, len(prev), size)]
    with ProcessPoolExecutor(threads) as pool:
        for found in pool.map(_expand_chunk, chunks):
            for key in found:
                if key not in seen:
                    seen.add(key)
                    yield key


def enumerate_laman(n: int, cap: int = DEFAULT_CAP, threads: int | None = None) -> Catalog:
    """All Laman graphs on ``n`` vertices, one canonical representative each."""
    if n < 2:
        raise ValueError("Laman graphs need at least two vertices")
    if n > cap:
        raise CapExceeded(f"n = {n} is above the enumeration cap {cap}; raise the cap to force it")
    threads = _workers(threads)

    def stream():
        level = [((0, 1),)]
        if n == 2:
            yield from level
            return
        for k in range(2, n - 1):
            level = list(_level(k, level, threads))
        yield from _level(n - 1, level, threads)

    return Catalog(n, stream())


@dataclass
class Extremes:
    n: int
    min: int
    max: int
    argmax: EdgeTuple
    argmin: EdgeTuple
    count: int


def _lam_chunk(args) -> list[int]:
    graphs, config = args
    engine = LamanEngine(config, MemoTable())
    return [engine.lam_rows([(a, b, a, b) for a, b in g]) for g in graphs]


def lam_values(graphs: list[EdgeTuple], threads: int | None = None,
               config: LamConfig | None = None) -> list[int]:
    """Laman numbers of catalog graphs; one shared memo per worker."""
    config = config or LamConfig()
    threads = _workers(threads)
    if threads == 1:
        return _lam_chunk((graphs, config))
    size = max(1, len(graphs) // (threads * 4))
    chunks = [(graphs[i:i + size], config) for i in range(0, len(graphs), size)]
    out: list[int] = []
    with ProcessPoolExecutor(threads) as pool:
        for vals in pool.map(_lam_chunk, chunks):
            out.extend(vals)
    return out


def extremal_laman(n: int, cap: int = DEFAULT_CAP, threads: int | None = None,
                   config: LamConfig | None = None) -> Extremes:
    """Minimal and maximal Laman number over all Laman graphs on ``n`` vertices."""
    graphs = list(enumerate_laman(n, cap, threads))
    values = lam_values(graphs, threads, config)
    lo = min(range(len(values)), key=lambda i: (values[i], i))
    hi = max(range(len(values)), key=lambda i: (values[i], -i))
    return Extremes(n, values[lo], values[hi], graphs[hi], graphs[lo], len(graphs))
