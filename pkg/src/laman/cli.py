"""Command-line frontend: ``laman {check,lam,henneberg,enumerate,extremal,verify}``.

Exit status: 0 success, 1 negative answer (not Laman, verification failed),
2 input error, 3 arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field

from . import catalog
from .formats import emit_edge_list, emit_graph6, parse_graph
from .graph import Bigraph, GraphError, MultiGraph, duplicate
from .lamnumber import LamanEngine, LamConfig, LamOverflowError, MemoTable, lam_with_stats
from .oracle import OracleConfig, verify
from .rigidity import base_edge, henneberg_sequence, laman_violation

SCHEMA = 1
COMMANDS = ("check", "lam", "henneberg", "enumerate", "extremal", "verify")


@dataclass
class RunConfig:
    command: str
    input: str | None = None  # path, "-" for stdin
    edges: str | None = None  # inline "u v, u v, ..."
    input_format: str = "auto"
    output: str = "text"
    threads: int = 1
    n: int | None = None
    cap: int = catalog.DEFAULT_CAP
    force: bool = False
    with_lam: bool = False
    graph_format: str = "graph6"
    no_reductions: bool = False
    pivot: str | None = None
    restarts: int = 50000
    tol: float = 1e-10
    cluster_tol: float = 1e-6
    expected: int | None = None
    seeds: list = field(default_factory=lambda: [0, 1])

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


def _default_threads() -> int:
    env = os.environ.get("LAMAN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _read_input(cfg: RunConfig, stdin) -> Bigraph | MultiGraph:
    if cfg.edges is not None:
        text = "\n".join(chunk.strip() for chunk in cfg.edges.split(","))
    elif cfg.input in (None, "-"):
        text = stdin.read()
    else:
        with open(cfg.input) as fh:
            text = fh.read()
    return parse_graph(text, cfg.input_format)


def _emit(out, cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        out.write(json.dumps({"schema": SCHEMA, "command": cfg.command, **payload}) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _pivot_arg(obj, raw: str | None):
    if raw is None:
        return None
    ids = obj.g.edges if isinstance(obj, Bigraph) else obj.edges
    for e in ids:
        if str(e) == raw:
            return e
    raise GraphError(f"unknown biedge {raw!r}")


def _cmd_check(cfg, out) -> int:
    g = _read_input(cfg, sys.stdin)
    if isinstance(g, Bigraph):
        raise GraphError("check expects a graph, not a bigraph")
    why = laman_violation(g)
    ok = why is None
    _emit(out, cfg, {"laman": ok, "violated": why},
          "laman" if ok else f"not-laman: {why}")
    return 0 if ok else 1


def _cmd_lam(cfg, out) -> int:
    obj = _read_input(cfg, sys.stdin)
    if isinstance(obj, MultiGraph):
        why = laman_violation(obj)
        if why is not None:
            raise GraphError(f"not a Laman graph: {why}")
        b = duplicate(obj)
    else:
        b = obj
    config = LamConfig(reductions=not cfg.no_reductions)
    res = lam_with_stats(b, MemoTable(), config, pivot=_pivot_arg(obj, cfg.pivot))
    st = res.stats
    stats = {"nodes": st.nodes, "memo_hits": st.memo_hits, "seconds": round(st.seconds, 6)}
    _emit(out, cfg, {"lam": res.value, "stats": stats},
          f"{res.value}\nnodes={st.nodes} memo_hits={st.memo_hits} seconds={st.seconds:.3f}")
    return 0


def _cmd_henneberg(cfg, out) -> int:
    g = _read_input(cfg, sys.stdin)
    if isinstance(g, Bigraph):
        raise GraphError("henneberg expects a graph, not a bigraph")
    steps = henneberg_sequence(g)
    if steps is None:
        _emit(out, cfg, {"laman": False, "steps": None}, "not-laman")
        return 1
    base = list(base_edge(g, steps))
    rows = [{"kind": s.kind, "u": s.u, "v": s.v, "w": s.w, "t": s.t} for s in steps]
    lines = [f"base {base[0]} {base[1]}"]
    for s in steps:
        if s.kind == 1:
            lines.append(f"I  u={s.u} v={s.v} -> t={s.t}")
        else:
            lines.append(f"II u={s.u} v={s.v} w={s.w} -> t={s.t}")
    _emit(out, cfg, {"laman": True, "base": base, "steps": rows}, "\n".join(lines))
    return 0


def _check_cap(cfg) -> int:
    if cfg.n is None:
        raise GraphError("--n is required")
    return max(cfg.cap, cfg.n) if cfg.force else cfg.cap


def _cmd_enumerate(cfg, out) -> int:
    cap = _check_cap(cfg)
    cat = catalog.enumerate_laman(cfg.n, cap=cap, threads=cfg.threads)
    engine = LamanEngine(LamConfig(), MemoTable())
    for edges in cat:
        g = catalog.to_multigraph(cfg.n, edges)
        value = engine.lam_rows([(a, b, a, b) for a, b in edges]) if cfg.with_lam else None
        if cfg.graph_format == "graph6" and cfg.output != "json":
            line = emit_graph6(g)
            if value is not None:
                line += f" {value}"
            out.write(line + "\n")
        else:
            rec = {"n": cfg.n, "edges": [list(e) for e in edges]}
            if value is not None:
                rec["lam"] = value
            out.write(json.dumps(rec) + "\n")
    logging.getLogger(__name__).info("%d graphs on %d vertices", cat.count, cfg.n)
    return 0


def _cmd_extremal(cfg, out) -> int:
    cap = _check_cap(cfg)
    ex = catalog.extremal_laman(cfg.n, cap=cap, threads=cfg.threads)
    witness = catalog.to_multigraph(cfg.n, ex.argmax)
    _emit(
        out, cfg,
        {"n": ex.n, "count": ex.count, "min": ex.min, "max": ex.max,
         "witness": [list(e) for e in ex.argmax]},
        f"n={ex.n} graphs={ex.count} min {ex.min} max {ex.max}\nwitness:\n{emit_edge_list(witness)}",
    )
    return 0


def _cmd_verify(cfg, out) -> int:
    obj = _read_input(cfg, sys.stdin)
    if isinstance(obj, MultiGraph):
        why = laman_violation(obj)
        if why is not None:
            raise GraphError(f"not a Laman graph: {why}")
        b = duplicate(obj)
    else:
        b = obj
    expected = cfg.expected
    if expected is None:
        expected = lam_with_stats(b).value
    ocfg = OracleConfig(tol=cfg.tol, cluster_tol=cfg.cluster_tol)
    rep = verify(b, expected, budget=cfg.restarts, seeds=tuple(cfg.seeds), config=ocfg)
    _emit(out, cfg, rep.to_json(), json.dumps(rep.to_json()))
    return 0 if rep.status == "agree" else 1


HANDLERS = {
    "check": _cmd_check,
    "lam": _cmd_lam,
    "henneberg": _cmd_henneberg,
    "enumerate": _cmd_enumerate,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        return HANDLERS[cfg.command](cfg, out)
    except LamOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:  # ParseError, GraphError, CapExceeded
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="laman", description="Laman numbers of minimally rigid graphs")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=["text", "json"], default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: LAMAN_THREADS or CPU count)")
    common.add_argument("-v", "--verbose", action="store_true")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    graph_in.add_argument("--edges", help="inline edge list, e.g. '1 2, 2 3, 1 3'")
    graph_in.add_argument("--input-format", choices=["auto", "edges", "graph6", "bigraph"], default="auto")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common, graph_in], help="decide the Laman property")
    lam_p = sub.add_parser("lam", parents=[common, graph_in], help="Laman number")
    lam_p.add_argument("--no-reductions", action="store_true", help="bare recursion, no bridge/untangle shortcuts")
    lam_p.add_argument("--pivot", help="edge id to branch on at the top level")
    sub.add_parser("henneberg", parents=[common, graph_in], help="Henneberg construction sequence")

    for name in ("enumerate", "extremal"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--cap", type=int, default=catalog.DEFAULT_CAP)
        sp.add_argument("--force", action="store_true", help="ignore the size cap")
        if name == "enumerate":
            sp.add_argument("--with-lam", action="store_true")
            sp.add_argument("--graph-format", choices=["graph6", "jsonl"], default="graph6")

    ver = sub.add_parser("verify", parents=[common, graph_in], help="numeric cross-check")
    ver.add_argument("--restarts", type=int, default=50000, help="restart budget per seed")
    ver.add_argument("--tol", type=float, default=1e-10)
    ver.add_argument("--cluster-tol", type=float, default=1e-6)
    ver.add_argument("--expected", type=int, help="expected count (default: computed)")
    ver.add_argument("--seeds", type=int, nargs="+", default=[0, 1])
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fields = vars(args).copy()
    fields.pop("verbose")
    if fields.get("threads") is None:
        fields["threads"] = _default_threads()
    try:
        cfg = RunConfig(**fields)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
