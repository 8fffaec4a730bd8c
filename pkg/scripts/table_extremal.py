#!/usr/bin/env python3
"""Minimal and maximal Laman number over all Laman graphs on n vertices.

Also recomputes the single listed extremal graphs for larger n, where a
full sweep is out of reach.

    python3 scripts/table_extremal.py --sweep-max 8 --single-max 12
"""

import argparse
import time

from laman.catalog import extremal_laman
from laman.data import EXTREMAL_EDGES, MAX_LAMAN, MIN_LAMAN, extremal_graph
from laman.lamnumber import lam_graph_with_stats


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sweep-max", type=int, default=8, help="largest n for the full catalog sweep")
    ap.add_argument("--single-max", type=int, default=12, help="largest n for the listed graphs")
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()

    print("full sweep")
    print(f"{'n':>3} {'graphs':>7} {'min':>6} {'max':>6} {'published':>12} {'seconds':>8}")
    for n in range(6, args.sweep_max + 1):
        t0 = time.perf_counter()
        ex = extremal_laman(n, cap=max(n, 10), threads=args.threads)
        ref = (MIN_LAMAN[n], MAX_LAMAN[n])
        mark = "" if (ex.min, ex.max) == ref else "  MISMATCH"
        print(f"{n:>3} {ex.count:>7} {ex.min:>6} {ex.max:>6} {str(ref):>12} "
              f"{time.perf_counter() - t0:>8.2f}{mark}", flush=True)

    print("\nlisted extremal graphs")
    print(f"{'n':>3} {'lam':>6} {'published':>9} {'nodes':>7} {'memo hits':>9} {'seconds':>8}")
    for n in sorted(EXTREMAL_EDGES):
        if n > args.single_max:
            break
        res = lam_graph_with_stats(extremal_graph(n))
        mark = "" if res.value == MAX_LAMAN[n] else "  MISMATCH"
        st = res.stats
        print(f"{n:>3} {res.value:>6} {MAX_LAMAN[n]:>9} {st.nodes:>7} {st.memo_hits:>9} "
              f"{st.seconds:>8.3f}{mark}", flush=True)


if __name__ == "__main__":
    main()
