"""Numerical cross-check: count the points of the affine bigraph system.

For a bigraph B = (G, H) without self-loops, a pivot biedge p and general
labels, the system in the variables x_uv ((u, v) ordered pairs of adjacent G
vertices) and y_tw (same for H) reads

    x_p = y_p = 1,
    x_e * y_e = label_e              for every other biedge e,
    x_uv = sum of x along the forest path u -> v   for pairs off the forest,

and likewise for y. It is square when B is pseudo-Laman, and has exactly
Lam(B) solutions. We eliminate the linear path relations, run damped Newton
from random complex starts on the remaining forest coordinates, lift each
converged point back to all pairs, and cluster.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .graph import Bigraph, GraphError, MultiGraph, has_self_loop, is_pseudo_laman, order_key, sort_ids

log = logging.getLogger(__name__)


@dataclass
class OracleConfig:
    restarts: int = 1000
    tol: float = 1e-10
    cluster_tol: float = 1e-6
    max_iter: int = 100
    halvings: int = 30
    batch: int = 2000


def spanning_forest(g: MultiGraph, order: list | None = None, depth_first: bool = False) -> dict:
    """Parent map of a BFS (or DFS) forest rooted at the least vertex of each component."""
    order = order or sort_ids(g.vertices)
    rank = {v: i for i, v in enumerate(order)}
    adj: dict = {v: [] for v in g.vertices}
    for ends in g.edges.values():
        if len(ends) == 2:
            a, b = ends
            adj[a].append(b)
            adj[b].append(a)
    for v in adj:
        adj[v] = sorted(set(adj[v]), key=rank.__getitem__)
    parent: dict = {}
    for root in order:
        if root in parent:
            continue
        parent[root] = None
        frontier = deque([root])
        while frontier:
            x = frontier.pop() if depth_first else frontier.popleft()
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    frontier.append(y)
    return parent


def _ordered_pairs(g: MultiGraph) -> list[tuple]:
    out = set()
    for ends in g.edges.values():
        if len(ends) == 2:
            a, b = ends
            out.add((a, b))
            out.add((b, a))
    return sorted(out, key=lambda p: (order_key(p[0]), order_key(p[1])))


class _Side:
    """Forest coordinates of one side: x_uv = potential(v) - potential(u)."""

    def __init__(self, g: MultiGraph, depth_first: bool = False):
        self.order = sort_ids(g.vertices)
        self.parent = spanning_forest(g, self.order, depth_first)
        self.tree_edges = [(p, c) for c, p in self.parent.items() if p is not None]
        self.tree_edges.sort(key=lambda e: (self.order.index(e[1])))
        col = {e: i for i, e in enumerate(self.tree_edges)}
        self.dim = len(self.tree_edges)
        self.potential: dict = {}
        for v in self.order:
            vec = np.zeros(self.dim)
            x = v
            while self.parent[x] is not None:
                vec[col[(self.parent[x], x)]] += 1.0
                x = self.parent[x]
            self.potential[v] = vec
        self.root = {}
        for v in self.order:
            x = v
            while self.parent[x] is not None:
                x = self.parent[x]
            self.root[v] = x

    def row(self, u, v) -> np.ndarray:
        return self.potential[v] - self.potential[u]

    def is_tree_pair(self, u, v) -> bool:
        return self.parent.get(v) == u or self.parent.get(u) == v


@dataclass
class RealizationSystem:
    """Square system for one bigraph, pivot and labeling.

    ``x_pairs``/``y_pairs`` are the ordered pairs P and Q (the full variable
    list). The solver works in forest coordinates; ``lift`` maps back.
    """

    bigraph: Bigraph
    pivot: object
    labels: dict
    x_pairs: list
    y_pairs: list
    sides: tuple = field(repr=False)
    # reduced system: rows over forest coordinates
    a_rows: np.ndarray = field(repr=False, default=None)
    b_rows: np.ndarray = field(repr=False, default=None)
    lam_vec: np.ndarray = field(repr=False, default=None)
    pivot_x: np.ndarray = field(repr=False, default=None)
    pivot_y: np.ndarray = field(repr=False, default=None)

    @property
    def num_variables(self) -> int:
        return len(self.x_pairs) + len(self.y_pairs)

    @property
    def num_equations(self) -> int:
        return len(self.equations())

    @property
    def reduced_dim(self) -> int:
        return self.sides[0].dim + self.sides[1].dim

    def equations(self) -> list[tuple]:
        """Symbolic listing of the full square system.

        Entries are ``("norm", side, pair)``, ``("prod", e, xpair, ypair, label)``
        and ``("path", side, pair, [(sign, pair), ...])``.
        """
        gx, hy = self.sides
        b = self.bigraph
        eqs: list[tuple] = [
            ("norm", "x", _oriented(b.g, self.pivot)),
            ("norm", "y", _oriented(b.h, self.pivot)),
        ]
        for e in sort_ids(b.biedges):
            if e != self.pivot:
                eqs.append(("prod", e, _oriented(b.g, e), _oriented(b.h, e), self.labels[e]))
        for name, side, pairs in (("x", gx, self.x_pairs), ("y", hy, self.y_pairs)):
            tree = set(side.tree_edges)
            for u, v in pairs:
                if (u, v) in tree:
                    continue
                eqs.append(("path", name, (u, v), _path(side, u, v)))
        return eqs

    def lift(self, z: np.ndarray) -> dict:
        """Full coordinates {("x", u, v): value, ("y", t, w): value} from forest coordinates."""
        gx, hy = self.sides
        f, g = z[: gx.dim], z[gx.dim:]
        out = {}
        for u, v in self.x_pairs:
            out[("x", u, v)] = complex(gx.row(u, v) @ f)
        for t, w in self.y_pairs:
            out[("y", t, w)] = complex(hy.row(t, w) @ g)
        return out

    def residual(self, z: np.ndarray) -> float:
        """Max residual of every equation of the full system at the lifted point."""
        full = self.lift(z)
        worst = 0.0
        for eq in self.equations():
            if eq[0] == "norm":
                r = full[(eq[1],) + eq[2]] - 1.0
            elif eq[0] == "prod":
                r = full[("x",) + eq[2]] * full[("y",) + eq[3]] - eq[4]
            else:
                _, name, pair, path = eq
                r = full[(name,) + pair] - sum(s * full[(name,) + p] for s, p in path)
            worst = max(worst, abs(r))
        return worst

    def cycle_residual(self, z: np.ndarray) -> float:
        """Residual of the path relations of a different (depth-first) forest.

        These are cycle equations of the original system that the square
        system does not list.
        """
        full = self.lift(z)
        worst = 0.0
        for name, g, pairs in (("x", self.bigraph.g, self.x_pairs), ("y", self.bigraph.h, self.y_pairs)):
            other = _Side(g, depth_first=True)
            for u, v in pairs:
                r = full[(name, u, v)] - sum(s * full[(name,) + p] for s, p in _path(other, u, v))
                worst = max(worst, abs(r))
        return worst

    # batched evaluation on forest coordinates ----------------------------

    def evaluate(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Residuals and Jacobians of the reduced system for a batch ``z`` of shape (S, n)."""
        dg = self.sides[0].dim
        f, g = z[:, :dg], z[:, dg:]
        ax = f @ self.a_rows.T
        by = g @ self.b_rows.T
        s, n = z.shape
        res = np.empty((s, n), dtype=complex)
        res[:, 0] = f @ self.pivot_x - 1.0
        res[:, 1] = g @ self.pivot_y - 1.0
        res[:, 2:] = ax * by - self.lam_vec
        jac = np.zeros((s, n, n), dtype=complex)
        jac[:, 0, :dg] = self.pivot_x
        jac[:, 1, dg:] = self.pivot_y
        jac[:, 2:, :dg] = by[:, :, None] * self.a_rows[None, :, :]
        jac[:, 2:, dg:] = ax[:, :, None] * self.b_rows[None, :, :]
        return res, jac


def _oriented(g: MultiGraph, e) -> tuple:
    ends = g.endpoints(e)
    return ends[0], ends[-1]


def _path(side: _Side, u, v) -> list[tuple]:
    """Forest path u -> v as signed tree pairs: x_uv = sum of sign * x_pair."""
    def up(x):
        chain = [x]
        while side.parent[x] is not None:
            x = side.parent[x]
            chain.append(x)
        return chain

    cu, cv = up(u), up(v)
    common = set(cu) & set(cv)
    out = []
    for x in cu:
        if x in common:
            break
        out.append((-1, (side.parent[x], x)))
    tail = []
    for x in cv:
        if x in common:
            break
        tail.append((1, (side.parent[x], x)))
    return out + tail[::-1]


def random_labels(biedges, rng: np.random.Generator) -> dict:
    """exp(i theta) * r with theta uniform on [0, 2 pi) and r uniform on [0.5, 2]."""
    out = {}
    for e in sort_ids(biedges):
        theta = rng.uniform(0.0, 2 * np.pi)
        r = rng.uniform(0.5, 2.0)
        out[e] = r * np.exp(1j * theta)
    return out


def build_system(b: Bigraph, pivot=None, seed: int = 0) -> RealizationSystem:
    if has_self_loop(b.g) or has_self_loop(b.h):
        raise GraphError("bigraph has a self-loop")
    if not is_pseudo_laman(b):
        raise GraphError("bigraph is not pseudo-Laman")
    order = sort_ids(b.biedges)
    pivot = order[0] if pivot is None else pivot
    if pivot not in b.biedges:
        raise GraphError(f"unknown biedge {pivot!r}")
    rng = np.random.default_rng(seed)
    labels = random_labels(b.biedges, rng)
    labels[pivot] = 1.0
    gx, hy = _Side(b.g), _Side(b.h)
    others = [e for e in order if e != pivot]
    a_rows = np.array([gx.row(*_oriented(b.g, e)) for e in others]).reshape(len(others), gx.dim)
    b_rows = np.array([hy.row(*_oriented(b.h, e)) for e in others]).reshape(len(others), hy.dim)
    return RealizationSystem(
        bigraph=b,
        pivot=pivot,
        labels=labels,
        x_pairs=_ordered_pairs(b.g),
        y_pairs=_ordered_pairs(b.h),
        sides=(gx, hy),
        a_rows=a_rows,
        b_rows=b_rows,
        lam_vec=np.array([labels[e] for e in others], dtype=complex),
        pivot_x=gx.row(*_oriented(b.g, pivot)),
        pivot_y=hy.row(*_oriented(b.h, pivot)),
    )


@dataclass
class SolutionSet:
    points: list
    count: int
    residual: float
    starts: int = 0
    warning: str | None = None


def _norm(r: np.ndarray) -> np.ndarray:
    return np.abs(r).max(axis=1)


def newton(system: RealizationSystem, z0: np.ndarray, cfg: OracleConfig) -> tuple[np.ndarray, np.ndarray]:
    """Damped Newton on a batch of starting points; returns points and residual norms."""
    z = z0.copy()
    res, jac = system.evaluate(z)
    rn = _norm(res)
    active = np.isfinite(rn)
    for _ in range(cfg.max_iter):
        idx = np.nonzero(active & (rn > cfg.tol * 1e-2))[0]
        if idx.size == 0:
            break
        try:
            step = np.linalg.solve(jac[idx], -res[idx][..., None])[..., 0]
        except np.linalg.LinAlgError:
            step = np.stack([np.linalg.lstsq(j, -r, rcond=None)[0] for j, r in zip(jac[idx], res[idx])])
        t = np.ones(idx.size)
        pending = np.arange(idx.size)
        new_z = z[idx].copy()
        new_rn = rn[idx].copy()
        new_res, new_jac = res[idx].copy(), jac[idx].copy()
        for _h in range(cfg.halvings + 1):
            cand = z[idx[pending]] + t[pending, None] * step[pending]
            r_c, j_c = system.evaluate(cand)
            n_c = _norm(r_c)
            ok = np.isfinite(n_c) & (n_c < rn[idx[pending]])
            sel = pending[ok]
            new_z[sel], new_rn[sel] = cand[ok], n_c[ok]
            new_res[sel], new_jac[sel] = r_c[ok], j_c[ok]
            pending = pending[~ok]
            if pending.size == 0:
                break
            t[pending] *= 0.5
        # starts that could not decrease the residual are stuck
        active[idx[pending]] = False
        z[idx], rn[idx] = new_z, new_rn
        res[idx], jac[idx] = new_res, new_jac
    return z, rn


def _cluster(points: list[np.ndarray], z: np.ndarray, cluster_tol: float) -> bool:
    scale = max(1.0, float(np.abs(z).max()))
    for p in points:
        if np.abs(p - z).max() <= cluster_tol * scale:
            return False
    points.append(z)
    return True


def count_solutions(system: RealizationSystem, restarts: int = 1000, tol: float = 1e-10,
                    cluster_tol: float = 1e-6, seed: int = 0,
                    config: OracleConfig | None = None,
                    known: SolutionSet | None = None) -> SolutionSet:
    """Multi-start Newton; the count never exceeds the true number when tolerances are sound."""
    if restarts < 1:
        raise ValueError("restarts must be positive")
    cfg = config or OracleConfig()
    cfg = OracleConfig(restarts, tol, cluster_tol, cfg.max_iter, cfg.halvings, cfg.batch)
    rng = np.random.default_rng(seed + 7919)
    n = system.reduced_dim
    points = list(known.points) if known else []
    worst = known.residual if known else 0.0
    done = 0
    while done < restarts:
        s = min(cfg.batch, restarts - done)
        z0 = (rng.standard_normal((s, n)) + 1j * rng.standard_normal((s, n))) * rng.uniform(0.3, 3.0, (s, 1))
        z, rn = newton(system, z0, cfg)
        for i in np.nonzero(rn < tol)[0]:
            if _cluster(points, z[i], cluster_tol):
                worst = max(worst, float(rn[i]))
        done += s
    warning = None
    if not points:
        warning = "no starting point converged"
        log.warning("%s for %d restarts", warning, restarts)
    starts = done + (known.starts if known else 0)
    return SolutionSet(points, len(points), worst, starts, warning)


@dataclass
class VerifyReport:
    expected: int
    counted: list
    status: str  # agree | undercount | overcount
    seeds: list
    residual: float

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "expected": self.expected,
            "counted": self.counted,
            "status": self.status,
            "seeds": self.seeds,
            "residual": self.residual,
        }


def verify(b: Bigraph, expected: int, budget: int = 50000, seeds=(0, 1),
           config: OracleConfig | None = None) -> VerifyReport:
    """Compare ``expected`` with numeric solution counts for several labelings.

    Restarts double per round until the count reaches ``expected`` or the
    budget (per seed) is spent. A count above ``expected`` is an overcount;
    a count below it after the whole budget is reported as undercount, which
    is inconclusive rather than a refutation.
    """
    cfg = config or OracleConfig()
    try:
        systems = [build_system(b, seed=s) for s in seeds]
    except GraphError:
        # Z is empty or not zero-dimensional; Lam is 0 by convention here
        return VerifyReport(expected, [0 for _ in seeds], "agree" if expected == 0 else "undercount",
                            list(seeds), 0.0)
    counted, worst = [], 0.0
    for s, system in zip(seeds, systems):
        sols, used, rounds = None, 0, 0
        chunk = min(256, budget)
        while used < budget:
            chunk = min(chunk, budget - used)
            sols = count_solutions(system, chunk, cfg.tol, cfg.cluster_tol, seed=s * 100003 + rounds,
                                   config=cfg, known=sols)
            used += chunk
            rounds += 1
            if sols.count >= expected:
                # one more round of the same size to expose spurious extra points
                if used < budget:
                    sols = count_solutions(system, min(chunk, budget - used), cfg.tol, cfg.cluster_tol,
                                           seed=s * 100003 + rounds, config=cfg, known=sols)
                break
            chunk *= 2
        counted.append(sols.count)
        if sols.points:
            worst = max(worst, max(system.residual(p) for p in sols.points))
    if any(c > expected for c in counted):
        status = "overcount"
    elif all(c == expected for c in counted):
        status = "agree"
    else:
        status = "undercount"
    return VerifyReport(expected, counted, status, list(seeds), worst)
