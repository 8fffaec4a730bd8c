import itertools
import random

import networkx as nx
import pytest

from laman.catalog import enumerate_laman, to_multigraph
from laman.data import K4, TRIANGLE, extremal_graph
from laman.graph import GraphError, MultiGraph
from laman.rigidity import (
    apply_henneberg1,
    apply_henneberg2,
    base_edge,
    henneberg_sequence,
    is_laman,
    laman_violation,
    pebble_game,
    replay,
)

from conftest import all_simple_graphs

SQUARE_DIAGONAL = MultiGraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])


def brute_force_laman(n: int, edges) -> bool:
    """Connectivity-free counting definition: |E| = 2|V|-3 and every edge subset is sparse."""
    if n < 2 or len(edges) != 2 * n - 3:
        return False
    for k in range(2, len(edges) + 1):
        for sub in itertools.combinations(edges, k):
            nv = len({v for e in sub for v in e})
            if k > 2 * nv - 3:
                return False
    return True


def _nx(g: MultiGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(tuple(e) for e in g.edges.values())
    return out


def test_is_laman_examples():
    assert is_laman(TRIANGLE)
    assert is_laman(SQUARE_DIAGONAL)
    assert not is_laman(K4)
    assert "2|V|-3" in laman_violation(K4)


def test_violation_messages():
    two_triangles = MultiGraph.from_edges([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4)])
    # 6 vertices, 7 edges: count fails first
    assert "2|V|-3" in laman_violation(two_triangles)
    # K4 plus a pendant path: right count, overbraced subgraph
    k4_tail = MultiGraph.from_edges(list(K4.edge_pairs()) + [(4, 5)])
    assert laman_violation(k4_tail) is not None and "subgraph" in laman_violation(k4_tail)
    assert laman_violation(MultiGraph.from_edges([], vertices=[1])) is not None


def test_disconnected_is_not_laman():
    # K5 plus a separate edge: 7 vertices, 11 = 2*7 - 3 edges, two components
    k5 = list(itertools.combinations(range(5), 2))
    g = MultiGraph.from_edges(k5 + [(5, 6)])
    assert "connected" in laman_violation(g)


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        is_laman(MultiGraph.from_edges([(1, 1), (1, 2)]))


def test_pebble_game_matches_brute_force():
    for n in range(1, 7):
        for edges in all_simple_graphs(n) if n <= 5 else _sample_graphs(n, 3000):
            g = MultiGraph.from_edges(edges, vertices=range(n))
            expected = brute_force_laman(n, edges) and n >= 2
            assert is_laman(g) == expected, edges


def _sample_graphs(n, k):
    rng = random.Random(n)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(k):
        # bias toward the interesting edge count 2n - 3
        m = 2 * n - 3 if rng.random() < 0.8 else rng.randint(0, len(pairs))
        yield rng.sample(pairs, m)
    # all graphs with exactly 2n - 3 edges on 6 vertices: C(15, 9) = 5005
    yield from (list(c) for c in itertools.combinations(pairs, 2 * n - 3))


def test_pebble_game_independent_sets():
    accepted, rejected = pebble_game(4, [(a - 1, b - 1) for a, b in K4.edge_pairs()])
    assert len(accepted) == 5 and len(rejected) == 1


def test_henneberg_moves_examples():
    edge = MultiGraph.from_edges([(1, 2)])
    tri = apply_henneberg1(edge, 1, 2)
    assert nx.is_isomorphic(_nx(tri), _nx(TRIANGLE))
    four = apply_henneberg1(TRIANGLE, 1, 2)
    assert nx.is_isomorphic(_nx(four), _nx(SQUARE_DIAGONAL))
    h2 = apply_henneberg2(TRIANGLE, 1, 2, 3)
    assert {frozenset(e) for e in h2.edges.values()} == {
        frozenset(p) for p in [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    }
    assert is_laman(h2)


def test_henneberg2_from_four_vertices_gives_known_graphs():
    five = {nx.weisfeiler_lehman_graph_hash(_nx(to_multigraph(5, g))): to_multigraph(5, g) for g in enumerate_laman(5)}
    assert len(five) == 3
    for u, v in SQUARE_DIAGONAL.edge_pairs():
        for w in SQUARE_DIAGONAL.vertices - {u, v}:
            g = apply_henneberg2(SQUARE_DIAGONAL, u, v, w)
            assert is_laman(g)
            assert any(nx.is_isomorphic(_nx(g), _nx(r)) for r in five.values())


def test_henneberg_moves_reject_bad_input():
    with pytest.raises(GraphError):
        apply_henneberg1(TRIANGLE, 1, 1)
    with pytest.raises(GraphError):
        apply_henneberg2(SQUARE_DIAGONAL, 2, 4, 1)  # 2-4 is not an edge
    with pytest.raises(GraphError):
        apply_henneberg2(TRIANGLE, 1, 2, 2)


def test_henneberg_moves_preserve_laman():
    rng = random.Random(7)
    for n in range(2, 8):
        for edges in enumerate_laman(n):
            g = to_multigraph(n, edges)
            u, v = rng.sample(sorted(g.vertices), 2)
            g1 = apply_henneberg1(g, u, v)
            assert is_laman(g1) and len(g1.vertices) == n + 1 and g1.num_edges == g.num_edges + 2
            a, b = rng.choice(g.edge_pairs())
            others = sorted(g.vertices - {a, b})
            if others:
                g2 = apply_henneberg2(g, a, b, rng.choice(others))
                assert is_laman(g2) and len(g2.vertices) == n + 1 and g2.num_edges == g.num_edges + 2


def test_henneberg_sequence_examples():
    assert henneberg_sequence(MultiGraph.from_edges([(1, 2)])) == []
    steps = henneberg_sequence(TRIANGLE)
    assert len(steps) == 1 and steps[0].kind == 1
    g6 = extremal_graph(6)
    steps = henneberg_sequence(g6)
    assert len(steps) == 4
    rebuilt = replay(base_edge(g6, steps), steps)
    assert rebuilt == {frozenset(e) for e in g6.edges.values()}
    assert henneberg_sequence(K4) is None


def test_sequence_iff_laman():
    rng = random.Random(8)
    for n in range(2, 9):
        for edges in enumerate_laman(n):
            g = to_multigraph(n, edges)
            steps = henneberg_sequence(g)
            assert steps is not None
            assert replay(base_edge(g, steps), steps) == {frozenset(e) for e in g.edges.values()}
            # perturb: move one edge to a non-edge; the result is Laman iff a sequence exists
            if n >= 4:
                present = set(edges)
                absent = [p for p in itertools.combinations(range(n), 2) if p not in present]
                drop = rng.choice(edges)
                bad = to_multigraph(n, [e for e in edges if e != drop] + [rng.choice(absent)])
                assert (henneberg_sequence(bad) is not None) == is_laman(bad)


def test_sequence_deterministic():
    g = extremal_graph(8)
    assert henneberg_sequence(g) == henneberg_sequence(g)
