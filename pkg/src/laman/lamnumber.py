"""Exact Laman numbers of bigraphs by the pivot-biedge recursion.

For a pseudo-Laman bigraph B = (G, H) without self-loops and a pivot biedge p:

    Lam(B) = Lam(G/p, H\\p) + Lam(G\\p, H/p)
             + sum over M, N  Lam(G/M, H\\M) * Lam(G\\N, H/N)

with M u N = all biedges, M n N = {p}, |M|, |N| >= 2 and both quotients
pseudo-Laman. Base cases: a self-loop gives 0, a single pair of edges gives 1.

The engine works on compact rows ``(g0, g1, h0, h1)`` of small integers. The
subset sweep is a depth-first assignment of each non-pivot biedge to M or N
with two union-find label arrays per side, so that self-loops in either
quotient and violations of the dimension balance are detected as soon as they
become unavoidable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canon import core_certificate, to_core
from .graph import Bigraph, GraphError, MultiGraph, contract, delete, duplicate

INT64_MAX = 2**63 - 1

Row = tuple  # (g0, g1, h0, h1)


class LamOverflowError(ArithmeticError):
    """A Laman number or partial sum left the signed 64-bit range."""


def _checked(x: int) -> int:
    if x > INT64_MAX:
        raise LamOverflowError(f"value {x} exceeds the 64-bit range")
    return x


# ---------------------------------------------------------------------------
# bigraph-level operations on the public data model


def left_quot(b: Bigraph, m) -> Bigraph:
    """(G/M, H\\M) on the biedges outside ``m``."""
    return Bigraph(contract(b.g, m), delete(b.h, m))


def right_quot(b: Bigraph, m) -> Bigraph:
    """(G\\M, H/M) on the biedges outside ``m``."""
    return Bigraph(delete(b.g, m), contract(b.h, m))


@dataclass(frozen=True)
class SubsetPair:
    m: frozenset
    n: frozenset
    pivot: object


def subset_pairs(b: Bigraph, pivot) -> Iterator[SubsetPair]:
    """All (M, N) with M u N = E, M n N = {pivot}, |M|, |N| >= 2 (unfiltered)."""
    if pivot not in b.biedges:
        raise GraphError(f"unknown biedge {pivot!r}")
    rest = sorted(b.biedges - {pivot}, key=repr)
    k = len(rest)
    if k < 2:
        return
    for mask in range(1, 2**k - 1):
        s = frozenset(rest[i] for i in range(k) if mask >> i & 1)
        yield SubsetPair(s | {pivot}, (b.biedges - s), pivot)


# ---------------------------------------------------------------------------
# compact helpers


def _normalize(rows) -> tuple:
    """Relabel vertices of each side to 0.. by first appearance (drops isolated ones)."""
    gm: dict = {}
    hm: dict = {}
    out = []
    for a, b, c, d in rows:
        a = gm.setdefault(a, len(gm))
        b = gm.setdefault(b, len(gm))
        c = hm.setdefault(c, len(hm))
        d = hm.setdefault(d, len(hm))
        out.append((a, b, c, d))
    return tuple(out)


def _nverts(rows, side: int) -> int:
    if side == 0:
        return 1 + max(max(r[0], r[1]) for r in rows)
    return 1 + max(max(r[2], r[3]) for r in rows)


def _rank(pairs, n: int) -> int:
    """Number of vertices minus components of the graph on ``pairs`` (over n vertices)."""
    parent = list(range(n))
    r = 0
    for a, b in pairs:
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a != b:
            parent[a] = b
            r += 1
    return r


def _bridges(pairs, n: int) -> list[bool]:
    out = []
    for i, (a, b) in enumerate(pairs):
        if a == b:
            out.append(False)
            continue
        others = [p for j, p in enumerate(pairs) if j != i]
        parent = list(range(n))
        for x, y in others:
            while parent[x] != x:
                x = parent[x]
            while parent[y] != y:
                y = parent[y]
            if x != y:
                parent[x] = y
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        out.append(a != b)
    return out


def _component_edges(pairs, n: int) -> list[int]:
    """Component label (root vertex) of every edge."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(a) for a, _ in pairs]


def untangle(rows: Sequence[Row], i: int):
    """Split via biedge ``i`` into ``(rows1, rows2)`` or return None.

    Biedges sharing a component of G or of H must stay together; the
    component of ``i`` in G is forced to side 1 and its component in H to
    side 2. Both sides must be nonempty.
    """
    m = len(rows)
    ng, nh = _nverts(rows, 0), _nverts(rows, 1)
    gcomp = _component_edges([(r[0], r[1]) for r in rows], ng)
    hcomp = _component_edges([(r[2], r[3]) for r in rows], nh)
    others = [j for j in range(m) if j != i]
    # union-find over the other biedges
    parent = {j: j for j in others}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    first_g: dict = {}
    first_h: dict = {}
    for j in others:
        for table, key in ((first_g, gcomp[j]), (first_h, hcomp[j])):
            if key in table:
                a, b = find(j), find(table[key])
                if a != b:
                    parent[a] = b
            else:
                table[key] = j
    side1 = {find(j) for j in others if gcomp[j] == gcomp[i]}
    side2 = {find(j) for j in others if hcomp[j] == hcomp[i]}
    if side1 & side2:
        return None
    e1 = [j for j in others if find(j) in side1]
    e2 = [j for j in others if find(j) not in side1]
    if not e1 or not e2:
        return None
    return [rows[j] for j in e1], [rows[j] for j in e2]


# ---------------------------------------------------------------------------
# the engine


@dataclass
class LamConfig:
    """Switches for the recursion; none of them changes the result."""

    reductions: bool = True
    canonical: bool = True  # isomorphism-canonical memo keys, else labeled keys only
    swap_closure: bool = False
    pivot: int | None = None  # forced pivot row index at the top level only


@dataclass
class LamStats:
    nodes: int = 0
    memo_hits: int = 0
    leaves: int = 0
    seconds: float = 0.0


@dataclass
class LamResult:
    value: int
    stats: LamStats


@dataclass
class MemoTable:
    """Laman numbers keyed by labeled rows and by canonical certificates.

    A key is written once with its final value; rewriting it with a different
    value means the recursion is wrong and raises.
    """

    labeled: dict = field(default_factory=dict)
    canonical: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.canonical) + len(self.labeled)

    def put(self, table: dict, key, value: int) -> None:
        old = table.setdefault(key, value)
        if old != value:
            raise RuntimeError(f"memo key remapped from {old} to {value}")


class LamanEngine:
    def __init__(self, config: LamConfig | None = None, memo: MemoTable | None = None):
        self.config = config or LamConfig()
        self.memo = memo if memo is not None else MemoTable()
        self.stats = LamStats()

    # public entry points -------------------------------------------------

    def lam_rows(self, rows: Sequence[Row]) -> int:
        rows = list(rows)
        if not rows:
            return 0
        pivot = self.config.pivot
        if pivot is not None and not 0 <= pivot < len(rows):
            raise GraphError(f"pivot index {pivot} out of range")
        # the forced pivot refers to the input order, so keep it across normalization
        norm = _normalize(rows)
        return self._lam(norm, forced=pivot)

    # recursion -------------------------------------------------------------

    def _lam(self, rows: tuple, forced: int | None = None, checked: bool = False) -> int:
        self.stats.nodes += 1
        m = len(rows)
        if not checked:
            for a, b, c, d in rows:
                if a == b or c == d:
                    return 0
            ng, nh = _nverts(rows, 0), _nverts(rows, 1)
            dg = _rank([(r[0], r[1]) for r in rows], ng)
            dh = _rank([(r[2], r[3]) for r in rows], nh)
            if dg + dh != m + 1:
                return 0
        if m == 1:
            return 1
        cfg = self.config
        lkey = tuple(sorted(rows)) if forced is None else None
        if lkey is not None:
            hit = self.memo.labeled.get(lkey)
            if hit is not None:
                self.stats.memo_hits += 1
                return hit
        ckey = None
        if cfg.canonical and forced is None:
            ckey = core_certificate(rows, cfg.swap_closure)
            hit = self.memo.canonical.get(ckey)
            if hit is not None:
                self.stats.memo_hits += 1
                self.memo.put(self.memo.labeled, lkey, hit)
                return hit

        value = self._compute(rows, forced)

        if lkey is not None:
            self.memo.put(self.memo.labeled, lkey, value)
        if ckey is not None:
            self.memo.put(self.memo.canonical, ckey, value)
        return value

    def _compute(self, rows: tuple, forced: int | None) -> int:
        m = len(rows)
        ng, nh = _nverts(rows, 0), _nverts(rows, 1)
        gpairs = [(r[0], r[1]) for r in rows]
        hpairs = [(r[2], r[3]) for r in rows]
        bg = _bridges(gpairs, ng)
        bh = _bridges(hpairs, nh)

        if self.config.reductions and forced is None:
            for i in range(m):
                if bg[i] and bh[i]:
                    return 0
            for i in range(m):
                if bg[i] != bh[i]:
                    return self._lam(_normalize(rows[:i] + rows[i + 1:]))
            for i in range(m):
                split = untangle(rows, i)
                if split is not None:
                    # every biedge is now a non-bridge on both sides
                    v1 = self._lam(_normalize(split[0]))
                    if v1 == 0:
                        return 0
                    v2 = self._lam(_normalize(split[1]))
                    return _checked(v1 * v2)

        p = forced if forced is not None else choose_pivot_rows(rows, bg, bh)
        return self._sweep(rows, p, ng, nh)

    def _sweep(self, rows: tuple, p: int, ng: int, nh: int) -> int:
        pg0, pg1, ph0, ph1 = rows[p]
        others = rows[:p] + rows[p + 1:]
        k = len(others)
        dim_g = _rank([(r[0], r[1]) for r in rows], ng)
        dim_h = _rank([(r[2], r[3]) for r in rows], nh)
        total = 0

        # first two terms: M = {p} and N = {p}
        total += self._lam(_normalize(
            [((pg0 if a == pg1 else a), (pg0 if b == pg1 else b), c, d) for a, b, c, d in others]))
        total += self._lam(_normalize(
            [(a, b, (ph0 if c == ph1 else c), (ph0 if d == ph1 else d)) for a, b, c, d in others]))
        if k < 2:
            return _checked(total)

        lam = self._lam
        stats = self.stats
        left_target = dim_g - 1  # nullity(H[C]) + rank(G[M])
        right_target = dim_h - 1  # nullity(G[S]) + rank(H[N])

        # label arrays: gm = comps of G[M] (M = S + p), gs = comps of G[S],
        # hn = comps of H[N] (N = C + p), hc = comps of H[C]
        gm0 = list(range(ng))
        x = gm0[pg1]
        gm0 = [pg0 if y == x else y for y in gm0]
        hn0 = list(range(nh))
        x = hn0[ph1]
        hn0 = [ph0 if y == x else y for y in hn0]
        gs0 = list(range(ng))
        hc0 = list(range(nh))

        acc = [0]

        def rec(j, S, C, gm, gs, hn, hc, r_m, r_s, r_n, r_c):
            if j == k:
                ns, nc = len(S), len(C)
                if ns == 0 or nc == 0:
                    return
                if (nc - r_c) + r_m != left_target or (ns - r_s) + r_n != right_target:
                    return
                stats.leaves += 1
                left = _normalize([(gm[a], gm[b], c, d) for a, b, c, d in C])
                lv = lam(left, checked=True)
                if lv == 0:
                    return
                right = _normalize([(a, b, hn[c], hn[d]) for a, b, c, d in S])
                rv = lam(right, checked=True)
                if rv:
                    acc[0] = _checked(acc[0] + _checked(lv * rv))
                return
            a, b, c, d = e = others[j]
            # e goes to M (its G side is contracted on the left, kept on the right)
            if hn[c] != hn[d]:
                ga, gb = gm[a], gm[b]
                if ga != gb:
                    gm2 = [ga if y == gb else y for y in gm]
                    nm = r_m + 1
                    ok = all(gm2[u] != gm2[v] for u, v, _, _ in C)
                else:
                    gm2, nm, ok = gm, r_m, True
                if ok and (len(C) - r_c) + nm <= left_target:
                    sa, sb = gs[a], gs[b]
                    if sa != sb:
                        gs2 = [sa if y == sb else y for y in gs]
                        ns_ = r_s + 1
                    else:
                        gs2, ns_ = gs, r_s
                    if (len(S) + 1 - ns_) + r_n <= right_target:
                        rec(j + 1, S + [e], C, gm2, gs2, hn, hc, nm, ns_, r_n, r_c)
            # e goes to N (its H side is contracted on the right, kept on the left)
            if gm[a] != gm[b]:
                hc_, hd_ = hn[c], hn[d]
                if hc_ != hd_:
                    hn2 = [hc_ if y == hd_ else y for y in hn]
                    nn = r_n + 1
                    ok = all(hn2[u] != hn2[v] for _, _, u, v in S)
                else:
                    hn2, nn, ok = hn, r_n, True
                if ok and (len(S) - r_s) + nn <= right_target:
                    ca, cb = hc[c], hc[d]
                    if ca != cb:
                        hc2 = [ca if y == cb else y for y in hc]
                        nc_ = r_c + 1
                    else:
                        hc2, nc_ = hc, r_c
                    if (len(C) + 1 - nc_) + r_m <= left_target:
                        rec(j + 1, S, C + [e], gm, gs, hn2, hc2, r_m, r_s, nn, nc_)

        rec(0, [], [], gm0, gs0, hn0, hc0, 1 if pg0 != pg1 else 0, 0, 1 if ph0 != ph1 else 0, 0)
        return _checked(total + acc[0])


def choose_pivot_rows(rows: Sequence[Row], bg=None, bh=None) -> int:
    """Prefer a one-sided bridge, else a two-sided non-bridge of maximal endpoint degree."""
    m = len(rows)
    if bg is None:
        bg = _bridges([(r[0], r[1]) for r in rows], _nverts(rows, 0))
    if bh is None:
        bh = _bridges([(r[2], r[3]) for r in rows], _nverts(rows, 1))
    for i in range(m):
        if bg[i] != bh[i]:
            return i
    degg: dict = {}
    degh: dict = {}
    for a, b, c, d in rows:
        degg[a] = degg.get(a, 0) + 1
        degg[b] = degg.get(b, 0) + 1
        degh[c] = degh.get(c, 0) + 1
        degh[d] = degh.get(d, 0) + 1
    best, best_score = 0, None
    for i, (a, b, c, d) in enumerate(rows):
        if bg[i] or bh[i]:
            continue
        score = degg[a] + degg[b] + degh[c] + degh[d]
        if best_score is None or score > best_score:
            best, best_score = i, score
    return best


# ---------------------------------------------------------------------------
# public API on Bigraph / MultiGraph


def _pivot_index(b: Bigraph, pivot) -> int | None:
    if pivot is None:
        return None
    _, order = to_core(b)
    if pivot not in order:
        raise GraphError(f"unknown biedge {pivot!r}")
    return order.index(pivot)


def choose_pivot(b: Bigraph):
    """The biedge the recursion would branch on first."""
    rows, order = to_core(b)
    return order[choose_pivot_rows(rows)]


def lam(b: Bigraph, memo: MemoTable | None = None, config: LamConfig | None = None,
        pivot=None) -> int:
    """Laman number of a bigraph (0 when not pseudo-Laman or with a self-loop)."""
    return lam_with_stats(b, memo, config, pivot).value


def lam_with_stats(b: Bigraph, memo: MemoTable | None = None, config: LamConfig | None = None,
                   pivot=None) -> LamResult:
    config = config or LamConfig()
    if pivot is not None:
        config = LamConfig(config.reductions, config.canonical, config.swap_closure,
                           _pivot_index(b, pivot))
    engine = LamanEngine(config, memo)
    rows, _ = to_core(b)
    t0 = time.perf_counter()
    value = engine.lam_rows(rows)
    engine.stats.seconds = time.perf_counter() - t0
    return LamResult(value, engine.stats)


def lam_graph(g: MultiGraph, memo: MemoTable | None = None, config: LamConfig | None = None,
              pivot=None) -> int:
    """Number of complex realizations of a Laman graph up to direct isometries."""
    return lam_graph_with_stats(g, memo, config, pivot).value


def lam_graph_with_stats(g: MultiGraph, memo: MemoTable | None = None,
                         config: LamConfig | None = None, pivot=None) -> LamResult:
    from .rigidity import laman_violation

    why = laman_violation(g)
    if why is not None:
        raise NotLamanError(why)
    return lam_with_stats(duplicate(g), memo, config, pivot)


class NotLamanError(GraphError):
    """Input graph is not a Laman graph; the message names the failed condition."""
