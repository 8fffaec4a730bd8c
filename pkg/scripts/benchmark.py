#!/usr/bin/env python3
"""Time the recursion on the listed extremal graphs under each configuration.

    python3 scripts/benchmark.py --max-n 12 [--repeat 3]
"""

import argparse
import json
import statistics

from laman.data import EXTREMAL_EDGES, extremal_graph
from laman.lamnumber import LamConfig, lam_graph_with_stats

CONFIGS = {
    "default": LamConfig(),
    "labeled-keys": LamConfig(canonical=False),
    "swap-closure": LamConfig(swap_closure=True),
    "no-reductions": LamConfig(reductions=False),
    "bare": LamConfig(reductions=False, canonical=False),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="one JSON record per line")
    args = ap.parse_args()

    if not args.json:
        print(f"{'n':>3} {'config':<14} {'lam':>6} {'nodes':>7} {'hits':>7} {'median s':>9}")
    for n in sorted(EXTREMAL_EDGES):
        if n > args.max_n:
            break
        g = extremal_graph(n)
        for name, cfg in CONFIGS.items():
            runs = [lam_graph_with_stats(g, config=cfg) for _ in range(args.repeat)]
            sec = statistics.median(r.stats.seconds for r in runs)
            r = runs[0]
            if args.json:
                print(json.dumps({"n": n, "config": name, "lam": r.value, "nodes": r.stats.nodes,
                                  "memo_hits": r.stats.memo_hits, "seconds": sec}))
            else:
                print(f"{n:>3} {name:<14} {r.value:>6} {r.stats.nodes:>7} {r.stats.memo_hits:>7} {sec:>9.3f}",
                      flush=True)


if __name__ == "__main__":
    main()
