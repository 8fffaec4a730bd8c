"""Laman property via the (2,3)-pebble game, and Henneberg constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Literal

from .graph import GraphError, MultiGraph, components, order_key, sort_ids


def _require_simple(g: MultiGraph) -> None:
    if not g.is_simple():
        raise GraphError("expected a simple graph (no self-loops or parallel edges)")


def pebble_game(n: int, edges: Iterable[tuple[int, int]], k: int = 2, l: int = 3):
    """Run the (k, l)-pebble game on vertices 0..n-1.

    Returns ``(accepted, rejected)`` edge lists. The accepted edges form a
    maximal (k, l)-sparse subgraph.
    """
    pebbles = [k] * n
    out: list[set[int]] = [set() for _ in range(n)]
    accepted, rejected = [], []

    def collect(root: int, keep: int) -> bool:
        # DFS along pebble-directed edges for a free pebble, then reverse the path
        prev = {root: None, keep: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in out[x]:
                if y in prev:
                    continue
                prev[y] = x
                if pebbles[y] > 0:
                    pebbles[y] -= 1
                    while prev[y] is not None:
                        p = prev[y]
                        out[p].discard(y)
                        out[y].add(p)
                        y = p
                    pebbles[root] += 1
                    return True
                stack.append(y)
        return False

    for u, v in edges:
        if u == v:
            rejected.append((u, v))
            continue
        while pebbles[u] + pebbles[v] < l + 1:
            if pebbles[u] < k and collect(u, v):
                continue
            if pebbles[v] < k and collect(v, u):
                continue
            break
        if pebbles[u] + pebbles[v] >= l + 1:
            if pebbles[u] == 0:
                u, v = v, u
            pebbles[u] -= 1
            out[u].add(v)
            accepted.append((u, v))
        else:
            rejected.append((u, v))
    return accepted, rejected


def laman_violation(g: MultiGraph) -> str | None:
    """None if ``g`` is Laman, else a short description of the failed condition."""
    _require_simple(g)
    nv, ne = len(g.vertices), g.num_edges
    if nv < 2:
        return "a Laman graph has at least two vertices"
    if ne != 2 * nv - 3:
        return f"|E| = 2|V|-3 violated ({ne} != {2 * nv - 3})"
    if len(components(g)) != 1:
        return "graph is not connected"
    verts = sort_ids(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    pairs = [tuple(index[x] for x in sort_ids(ends)) for ends in g.edges.values()]
    _, rejected = pebble_game(nv, pairs)
    if rejected:
        u, v = rejected[0]
        return (
            f"subgraph condition |E'| <= 2|V'|-3 violated "
            f"(edge {verts[u]!r}-{verts[v]!r} is in an overbraced subgraph)"
        )
    return None


def is_laman(g: MultiGraph) -> bool:
    return laman_violation(g) is None


# ---------------------------------------------------------------------------
# Henneberg moves


@dataclass(frozen=True)
class HennebergStep:
    """One construction move; ``kind`` 1 adds t on u, v; kind 2 also splits edge uv and uses w."""

    kind: Literal[1, 2]
    u: Hashable
    v: Hashable
    t: Hashable
    w: Hashable = None

    def apply(self, g: MultiGraph) -> MultiGraph:
        if self.kind == 1:
            return apply_henneberg1(g, self.u, self.v, t=self.t)
        return apply_henneberg2(g, self.u, self.v, self.w, t=self.t)


def _fresh(existing: Iterable) -> Hashable:
    existing = set(existing)
    ints = [x for x in existing if isinstance(x, int) and not isinstance(x, bool)]
    if len(ints) == len(existing):
        return max(ints, default=-1) + 1
    i = len(existing)
    while f"t{i}" in existing:
        i += 1
    return f"t{i}"


def _add_edges(edges: dict, pairs) -> dict:
    for p in pairs:
        edges[_fresh(edges)] = frozenset(p)
    return edges


def apply_henneberg1(g: MultiGraph, u, v, t=None) -> MultiGraph:
    """Add a new vertex t joined to u and v."""
    if u == v:
        raise GraphError("Henneberg I needs two distinct vertices")
    for x in (u, v):
        if x not in g.vertices:
            raise GraphError(f"unknown vertex {x!r}")
    t = _fresh(g.vertices) if t is None else t
    if t in g.vertices:
        raise GraphError(f"vertex {t!r} is not fresh")
    edges = _add_edges(dict(g.edges), [(u, t), (v, t)])
    return MultiGraph(g.vertices | {t}, edges)


def apply_henneberg2(g: MultiGraph, u, v, w, t=None) -> MultiGraph:
    """Remove edge uv, add a new vertex t joined to u, v and w."""
    target = frozenset((u, v))
    hit = [e for e, ends in g.edges.items() if ends == target]
    if u == v or not hit:
        raise GraphError(f"{u!r}-{v!r} is not an edge")
    if w in (u, v) or w not in g.vertices:
        raise GraphError(f"third vertex {w!r} must be a vertex distinct from {u!r}, {v!r}")
    t = _fresh(g.vertices) if t is None else t
    if t in g.vertices:
        raise GraphError(f"vertex {t!r} is not fresh")
    edges = dict(g.edges)
    del edges[hit[0]]
    edges = _add_edges(edges, [(u, t), (v, t), (w, t)])
    return MultiGraph(g.vertices | {t}, edges)


def _adjacency(g: MultiGraph) -> dict:
    adj = {v: set() for v in g.vertices}
    for ends in g.edges.values():
        a, b = ends
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _edge_set(g: MultiGraph) -> set:
    return set(g.edges.values())


def henneberg_sequence(g: MultiGraph) -> list[HennebergStep] | None:
    """Steps rebuilding ``g`` from its base edge, or None if ``g`` is not Laman.

    Degree-2 vertices are peeled as inverse type-I moves first; otherwise a
    degree-3 vertex is peeled as an inverse type-II move, re-inserting the
    first non-edge among its neighbors (in vertex order) that leaves a Laman
    graph. The result is verified by replaying it.
    """
    _require_simple(g)
    if not is_laman(g):
        return None
    adj = _adjacency(g)
    steps: list[HennebergStep] = []
    while len(adj) > 2:
        by_order = sorted(adj, key=order_key)
        step = None
        for t in by_order:
            if len(adj[t]) == 2:
                u, v = sort_ids(adj[t])
                step = HennebergStep(1, u, v, t)
                _remove(adj, t)
                break
        if step is None:
            for t in by_order:
                if len(adj[t]) != 3:
                    continue
                step = _inverse_type2(adj, t)
                if step is not None:
                    break
            if step is None:
                raise RuntimeError("no valid inverse Henneberg move found on a Laman graph")
        steps.append(step)
    steps.reverse()
    base = sort_ids(adj)
    if replay(base, steps) != _edge_set(g):
        raise RuntimeError("Henneberg sequence does not replay to the input graph")
    return steps


def _remove(adj: dict, t) -> None:
    for x in adj.pop(t):
        adj[x].discard(t)


def _inverse_type2(adj: dict, t) -> HennebergStep | None:
    nbrs = sort_ids(adj[t])
    for i in range(3):
        for j in range(i + 1, 3):
            u, w = nbrs[i], nbrs[j]
            if w in adj[u]:
                continue
            trial = {x: set(ys) for x, ys in adj.items()}
            _remove(trial, t)
            trial[u].add(w)
            trial[w].add(u)
            pairs = {frozenset((a, b)) for a in trial for b in trial[a]}
            candidate = MultiGraph.from_edges([tuple(p) for p in pairs], vertices=trial)
            if is_laman(candidate):
                third = next(x for x in nbrs if x not in (u, w))
                adj.clear()
                adj.update(trial)
                return HennebergStep(2, u, w, t, third)
    return None


def replay(base: Iterable, steps: Iterable[HennebergStep]) -> set:
    """Edge set (as frozensets) obtained by applying ``steps`` to the edge ``base``."""
    a, b = base
    g = MultiGraph.from_edges([(a, b)])
    for s in steps:
        g = s.apply(g)
    return _edge_set(g)


def base_edge(g: MultiGraph, steps: Iterable[HennebergStep]) -> tuple:
    """The two vertices of ``g`` not introduced by any step."""
    new = {s.t for s in steps}
    return tuple(sort_ids(g.vertices - new))
