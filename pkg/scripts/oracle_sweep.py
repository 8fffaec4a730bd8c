#!/usr/bin/env python3
"""Cross-check the recursion against numeric solution counts on small catalogs.

    python3 scripts/oracle_sweep.py --max-n 6 --budget 50000
"""

import argparse
import time

from laman.catalog import enumerate_laman, to_multigraph
from laman.graph import duplicate
from laman.lamnumber import MemoTable, lam_graph
from laman.oracle import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=50000)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1])
    args = ap.parse_args()

    memo = MemoTable()
    tally: dict = {}
    for n in range(2, args.max_n + 1):
        for k, edges in enumerate(enumerate_laman(n)):
            g = to_multigraph(n, edges)
            t0 = time.perf_counter()
            value = lam_graph(g, memo)
            rep = verify(duplicate(g), value, budget=args.budget, seeds=tuple(args.seeds))
            tally[rep.status] = tally.get(rep.status, 0) + 1
            print(f"n={n} #{k:<4} lam={value:<5} counted={rep.counted} {rep.status:<10} "
                  f"residual={rep.residual:.1e} {time.perf_counter() - t0:.1f}s", flush=True)
    print("summary:", tally)


if __name__ == "__main__":
    main()
