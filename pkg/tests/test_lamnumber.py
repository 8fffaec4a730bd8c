import random
from math import comb

import pytest

from laman import lamnumber
from laman.catalog import enumerate_laman, to_multigraph
from laman.data import FOUR_VERTEX, TRIANGLE, extremal_graph
from laman.graph import Bigraph, GraphError, MultiGraph, contract, delete, duplicate, is_bridge, is_pseudo_laman
from laman.lamnumber import (
    LamConfig,
    LamOverflowError,
    MemoTable,
    NotLamanError,
    choose_pivot,
    lam,
    lam_graph,
    lam_graph_with_stats,
    lam_with_stats,
    left_quot,
    right_quot,
    subset_pairs,
)
from laman.oracle import verify
from laman.rigidity import apply_henneberg1

BARE = LamConfig(reductions=False, canonical=False)
EDGE = MultiGraph.from_edges([(1, 2)])
SQUARE_DIAGONAL = MultiGraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])


def bigraph(g_pairs, h_pairs, ids=None) -> Bigraph:
    return Bigraph(MultiGraph.from_edges(g_pairs, ids=ids), MultiGraph.from_edges(h_pairs, ids=ids))


def relabeled(b: Bigraph, rng: random.Random) -> Bigraph:
    def shuffle(g):
        vs = list(g.vertices)
        ws = [f"v{i}" for i in range(len(vs))]
        rng.shuffle(ws)
        return g.relabel(dict(zip(vs, ws)))

    ids = list(b.biedges)
    new = list(range(100, 100 + len(ids)))
    rng.shuffle(new)
    ren = dict(zip(ids, new))
    g, h = shuffle(b.g), shuffle(b.h)
    return Bigraph(
        MultiGraph(g.vertices, {ren[e]: v for e, v in g.edges.items()}),
        MultiGraph(h.vertices, {ren[e]: v for e, v in h.edges.items()}),
    )


# values ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [(EDGE, 1), (TRIANGLE, 2), (FOUR_VERTEX, 4), (extremal_graph(6), 24), (extremal_graph(7), 56)],
)
def test_lam_examples(g, expected):
    assert lam(duplicate(g)) == expected


def test_lam_graph_examples():
    assert lam_graph(TRIANGLE) == 2
    assert lam_graph(SQUARE_DIAGONAL) == 4
    res = lam_graph_with_stats(extremal_graph(10))
    assert res.value == 880
    assert res.stats.nodes > 0 and res.stats.seconds >= 0


def test_lam_graph_rejects_non_laman():
    with pytest.raises(NotLamanError, match="2\\|V\\|-3"):
        lam_graph(MultiGraph.from_edges([(1, 2), (2, 3), (3, 1), (1, 4)]))


def test_base_cases():
    assert lam(bigraph([(1, 1)], [(1, 2)])) == 0
    assert lam(bigraph([(1, 2)], [(1, 1)])) == 0
    assert lam(bigraph([(1, 2)], [(5, 6)])) == 1


def test_non_pseudo_laman_is_zero():
    path = MultiGraph.from_edges([(1, 2), (2, 3)])
    assert not is_pseudo_laman(duplicate(path))
    assert lam(duplicate(path)) == 0


# bridges ---------------------------------------------------------------------------

# biedges 0,1,2 form a triangle on both sides; biedge 3 is a pendant bridge in G
# and, in H, a triple edge plus a pendant; both constructions are pseudo-Laman
DOUBLE_BRIDGE = bigraph([(1, 2), (2, 3), (1, 3), (3, 4)], [(1, 2), (1, 2), (1, 2), (1, 3)])
ONE_SIDED = bigraph([(1, 2), (2, 3), (1, 3), (3, 4)], [(1, 2), (2, 3), (1, 3), (1, 2)])


def test_double_bridge_is_zero():
    b = DOUBLE_BRIDGE
    assert is_pseudo_laman(b)
    assert is_bridge(b.g, 3) and is_bridge(b.h, 3)
    assert lam(b) == 0
    assert lam(b, config=BARE) == 0


def test_one_sided_bridge_reduction():
    b = ONE_SIDED
    assert is_pseudo_laman(b)
    assert is_bridge(b.g, 3) and not is_bridge(b.h, 3)
    assert choose_pivot(b) == 3
    reduced = Bigraph(delete(b.g, {3}), delete(b.h, {3}))
    expected = lam(reduced, config=BARE)
    assert expected == 2
    assert lam(b) == expected
    assert lam(b, config=BARE) == expected


def test_one_sided_bridge_matches_oracle():
    assert verify(ONE_SIDED, lam(ONE_SIDED), budget=4000).status == "agree"


# untangling -------------------------------------------------------------------------


def untangling_pair():
    """Triangle bigraph (Lam 2) beside the four-vertex bigraph (Lam 4), joined by biedge "p".

    "p" doubles edge 1-2 of the triangle in G and joins 1-4 of the four-vertex graph in H,
    so it is a bridge on neither side.
    """
    tri = [(1, 2), (2, 3), (1, 3)]
    four = [(11, 12), (11, 13), (12, 13), (12, 14), (13, 14)]
    g = tri + [(21, 22), (21, 23), (22, 23), (22, 24), (23, 24)] + [(1, 2)]
    h = [(31, 32), (32, 33), (31, 33)] + four + [(11, 14)]
    ids = [f"t{i}" for i in range(3)] + [f"f{i}" for i in range(5)] + ["p"]
    return bigraph(g, h, ids)


def test_untangle_multiplicative():
    b = untangling_pair()
    assert is_pseudo_laman(b)
    assert not is_bridge(b.g, "p") and not is_bridge(b.h, "p")
    on = lam(b)
    off = lam(b, config=BARE)
    assert on == off == lam(duplicate(TRIANGLE)) * lam(duplicate(FOUR_VERTEX)) == 8


def test_untangle_detection():
    b = untangling_pair()
    rows, order = lamnumber.to_core(b)
    split = lamnumber.untangle(rows, order.index("p"))
    assert split is not None
    assert sorted(map(len, split)) == [3, 5]


# quotients and subset pairs ----------------------------------------------------------


QUOT_G = MultiGraph.from_edges(
    [("a", "b"), ("b", "c"), ("e", "f"), ("d", "a"), ("d", "c"), ("d", "c")],
    ids=["ab", "bc", "ef", "da", "dc1", "dc2"],
)
QUOT_H = MultiGraph.from_edges(
    [("A", "C"), ("A", "C"), ("B", "D"), ("A", "B"), ("B", "C"), ("B", "D")],
    ids=["ab", "bc", "ef", "da", "dc1", "dc2"],
)


def test_left_quot_merges_and_keeps_h():
    b = Bigraph(QUOT_G, QUOT_H)
    q = left_quot(b, {"da", "dc1"})
    assert q.biedges == {"ab", "bc", "ef", "dc2"}
    assert len(q.g.vertices) == 4 and sum(len(x) == 1 for x in q.g.edges.values()) == 1
    assert q.h.vertices == {"A", "B", "C", "D"}
    assert q.h.edges["ab"] == q.h.edges["bc"] == frozenset("AC")


def test_quotient_boundaries():
    b = Bigraph(QUOT_G, MultiGraph.from_edges(QUOT_H.edge_pairs(), vertices=["Z"], ids=QUOT_H.edges))
    assert left_quot(b, set()).g == b.g and "Z" not in left_quot(b, set()).h.vertices
    assert right_quot(b, set()).h == b.h and right_quot(b, set()).g == b.g
    full = left_quot(duplicate(TRIANGLE), set(TRIANGLE.edges))
    assert len(full.g.vertices) == 1 and not full.h.vertices


def test_right_quot_is_swapped_left_quot():
    rng = random.Random(0)
    b = Bigraph(QUOT_G, QUOT_H)
    for _ in range(50):
        m = {e for e in b.biedges if rng.random() < 0.5}
        assert right_quot(b, m) == left_quot(b.swap(), m).swap()


def test_right_quot_single_edge_on_duplicate():
    b = duplicate(FOUR_VERTEX)
    q = right_quot(b, {"d"})
    assert q.g == delete(FOUR_VERTEX, {"d"}) and q.h == contract(FOUR_VERTEX, {"d"})


def test_subset_pair_counts():
    tri = duplicate(TRIANGLE)
    assert len(list(subset_pairs(tri, 0))) == 2
    four = duplicate(FOUR_VERTEX)
    pairs = list(subset_pairs(four, "d"))
    assert len(pairs) == 14
    for sp in pairs:
        assert sp.m | sp.n == four.biedges and sp.m & sp.n == {"d"}
        assert len(sp.m) >= 2 and len(sp.n) >= 2
    with pytest.raises(GraphError):
        list(subset_pairs(four, "zz"))


# invariances --------------------------------------------------------------------------


def test_pivot_invariance_small():
    for n in range(3, 7):
        for edges in enumerate_laman(n):
            b = duplicate(to_multigraph(n, edges))
            ref = lam(b)
            for e in b.biedges:
                assert lam(b, pivot=e) == ref
                assert lam(b, config=LamConfig(reductions=False), pivot=e) == ref


def test_isomorphism_invariance():
    rng = random.Random(11)
    for b in (duplicate(extremal_graph(7)), untangling_pair(), ONE_SIDED):
        ref = lam(b)
        for _ in range(50):
            assert lam(relabeled(b, rng)) == ref


def test_henneberg1_doubles_up_to_six():
    memo = MemoTable()
    for n in range(2, 6):
        for edges in enumerate_laman(n):
            g = to_multigraph(n, edges)
            base = lam_graph(g, memo)
            for u in range(n):
                for v in range(u + 1, n):
                    assert lam_graph(apply_henneberg1(g, u, v), memo) == 2 * base


def test_bounds_up_to_seven():
    memo = MemoTable()
    for n in range(2, 8):
        for edges in enumerate_laman(n):
            v = lam_graph(to_multigraph(n, edges), memo)
            assert 2 ** (n - 2) <= v <= max(1, comb(2 * n - 4, n - 2))


def test_config_variants_agree():
    g = extremal_graph(8)
    ref = lam_graph(g)
    for cfg in (LamConfig(canonical=False), LamConfig(swap_closure=True), LamConfig(reductions=False)):
        assert lam_graph(g, config=cfg) == ref == 136


def test_shared_memo_reuse():
    memo = MemoTable()
    first = lam_with_stats(duplicate(extremal_graph(8)), memo)
    second = lam_with_stats(duplicate(extremal_graph(8)), memo)
    assert first.value == second.value
    assert second.stats.nodes < first.stats.nodes


def test_memo_refuses_remap():
    memo = MemoTable()
    memo.put(memo.labeled, "k", 3)
    memo.put(memo.labeled, "k", 3)
    with pytest.raises(RuntimeError):
        memo.put(memo.labeled, "k", 4)


def test_overflow_raises(monkeypatch):
    monkeypatch.setattr(lamnumber, "INT64_MAX", 10)
    with pytest.raises(LamOverflowError):
        lam(duplicate(extremal_graph(6)))


def test_choose_pivot_deterministic():
    b = duplicate(extremal_graph(9))
    assert choose_pivot(b) == choose_pivot(b)
    assert choose_pivot(duplicate(TRIANGLE)) in TRIANGLE.edges
