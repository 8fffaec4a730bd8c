"""Multigraphs with self-loops, bigraphs, and the contraction/deletion algebra.

Edges carry opaque identifiers so that a biedge keeps naming the same edge on
both sides after any number of contractions or deletions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping

Vertex = Hashable
EdgeId = Hashable


class GraphError(ValueError):
    """Raised on malformed graph input (unknown edges, bad endpoints, ...)."""


def order_key(x) -> tuple:
    """Total order over heterogeneous opaque identifiers.

    Numbers sort numerically before everything else; anything else sorts by
    type name and then by its string form.
    """
    if isinstance(x, bool):
        return (1, "bool", str(x))
    if isinstance(x, int):
        return (0, "", x)
    if isinstance(x, frozenset):
        return (2, "frozenset", sorted((order_key(y) for y in x)))
    return (1, type(x).__name__, str(x))


def sort_ids(xs: Iterable) -> list:
    return sorted(xs, key=order_key)


class UnionFind:
    """Plain union-find with path halving and union by size."""

    def __init__(self, items: Iterable = ()):
        self.parent: dict = {}
        self.size: dict = {}
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class MultiGraph:
    """Finite undirected multigraph; ``edges`` maps edge id -> endpoint set.

    An endpoint set of size one is a self-loop. Parallel edges are distinct
    ids with equal endpoint sets.
    """

    vertices: frozenset
    edges: Mapping[EdgeId, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        verts = frozenset(self.vertices)
        edges = {}
        for eid, ends in dict(self.edges).items():
            ends = frozenset(ends)
            if not 1 <= len(ends) <= 2:
                raise GraphError(f"edge {eid!r} has {len(ends)} endpoints")
            if not ends <= verts:
                raise GraphError(f"edge {eid!r} has endpoints outside the vertex set")
            edges[eid] = ends
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", MappingProxyType(edges))

    @classmethod
    def from_edges(cls, pairs: Iterable, vertices: Iterable = (), ids: Iterable | None = None):
        """Build from ``(u, v)`` pairs; edge ids default to 0, 1, 2, ..."""
        pairs = [tuple(p) for p in pairs]
        ids = list(range(len(pairs))) if ids is None else list(ids)
        if len(ids) != len(pairs):
            raise GraphError("number of edge ids does not match number of edges")
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge id")
        verts = set(vertices)
        for p in pairs:
            verts.update(p)
        return cls(frozenset(verts), {eid: frozenset(p) for eid, p in zip(ids, pairs)})

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.edges.items())))

    def __repr__(self):
        es = ", ".join(f"{k!r}: {tuple(sort_ids(v))}" for k, v in self.edges.items())
        return f"MultiGraph(V={sort_ids(self.vertices)}, E={{{es}}})"

    def __len__(self):
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, e) -> tuple:
        """Endpoints of ``e`` in vertex order (one element for a loop)."""
        return tuple(sort_ids(self.edges[e]))

    def degree(self, v) -> int:
        # a loop counts twice
        return sum(2 if len(ends) == 1 else 1 for ends in self.edges.values() if v in ends)

    def neighbors(self, v) -> set:
        out = set()
        for ends in self.edges.values():
            if v in ends:
                out.update(ends - {v})
        return out

    def edge_pairs(self) -> list:
        """Endpoint tuples of all edges, ordered by edge id."""
        return [self.endpoints(e) for e in sort_ids(self.edges)]

    def is_simple(self) -> bool:
        seen = set()
        for ends in self.edges.values():
            if len(ends) == 1 or ends in seen:
                return False
            seen.add(ends)
        return True

    def relabel(self, mapping: Mapping) -> "MultiGraph":
        """Rename vertices through an injective ``mapping`` (missing keys kept)."""
        f = lambda v: mapping.get(v, v)  # noqa: E731
        verts = frozenset(f(v) for v in self.vertices)
        if len(verts) != len(self.vertices):
            raise GraphError("relabeling is not injective")
        return MultiGraph(verts, {e: frozenset(f(v) for v in ends) for e, ends in self.edges.items()})


def _check_subset(g: MultiGraph, s) -> frozenset:
    s = frozenset(s)
    unknown = s - g.edges.keys()
    if unknown:
        raise GraphError(f"unknown edge ids: {sort_ids(unknown)}")
    return s


def components(g: MultiGraph) -> list[frozenset]:
    """Connected components as vertex blocks, in a deterministic order."""
    uf = UnionFind(g.vertices)
    for ends in g.edges.values():
        a, *rest = ends
        for b in rest:
            uf.union(a, b)
    blocks = [frozenset(vs) for vs in uf.groups().values()]
    return sorted(blocks, key=lambda b: order_key(min(b, key=order_key)))


def dimension(g: MultiGraph) -> int:
    return len(g.vertices) - len(components(g))


def has_self_loop(g: MultiGraph) -> bool:
    return any(len(ends) == 1 for ends in g.edges.values())


def contract(g: MultiGraph, s) -> MultiGraph:
    """G/s: identify vertices joined inside the subgraph on ``s``.

    A merged class is named by the frozenset of its members; untouched
    vertices keep their identifiers. Surviving edges keep their ids and may
    become parallel edges or self-loops.
    """
    s = _check_subset(g, s)
    uf = UnionFind(g.vertices)
    for e in s:
        a, *rest = g.edges[e]
        for b in rest:
            uf.union(a, b)
    name = {}
    for members in uf.groups().values():
        label = members[0] if len(members) == 1 else frozenset(members)
        for v in members:
            name[v] = label
    edges = {
        e: frozenset(name[v] for v in ends) for e, ends in g.edges.items() if e not in s
    }
    return MultiGraph(frozenset(name.values()), edges)


def delete(g: MultiGraph, s) -> MultiGraph:
    """G\\s: drop the edges in ``s`` and every vertex left without edges."""
    s = _check_subset(g, s)
    edges = {e: ends for e, ends in g.edges.items() if e not in s}
    verts = frozenset().union(*edges.values()) if edges else frozenset()
    return MultiGraph(verts, edges)


def subgraph(g: MultiGraph, s) -> MultiGraph:
    """The subgraph determined by the edge set ``s`` (its vertices are the endpoints)."""
    s = _check_subset(g, s)
    return delete(g, g.edges.keys() - s)


def is_bridge(g: MultiGraph, e) -> bool:
    if e not in g.edges:
        raise GraphError(f"unknown edge id {e!r}")
    ends = g.edges[e]
    if len(ends) == 1:
        return False
    uf = UnionFind(g.vertices)
    for f, fends in g.edges.items():
        if f != e and len(fends) == 2:
            uf.union(*fends)
    a, b = ends
    return uf.find(a) != uf.find(b)


@dataclass(frozen=True)
class Bigraph:
    """Two multigraphs sharing one set of edge identifiers (the biedges)."""

    g: MultiGraph
    h: MultiGraph

    def __post_init__(self):
        if set(self.g.edges) != set(self.h.edges):
            raise GraphError("the two sides of a bigraph must have the same edge ids")

    @property
    def biedges(self) -> frozenset:
        return frozenset(self.g.edges)

    def __len__(self):
        return len(self.g.edges)

    def swap(self) -> "Bigraph":
        return Bigraph(self.h, self.g)


def duplicate(g: MultiGraph) -> Bigraph:
    """The bigraph (G, G) with the identity pairing of edges."""
    if has_self_loop(g):
        raise GraphError("cannot duplicate a graph with self-loops")
    return Bigraph(g, g)


def is_pseudo_laman(b: Bigraph) -> bool:
    return dimension(b.g) + dimension(b.h) == len(b.biedges) + 1

