#!/usr/bin/env python3
"""Number of Laman graphs on n vertices, up to isomorphism.

    python3 scripts/table_counts.py --max-n 9 [--threads 4]
"""

import argparse
import time

from laman.catalog import enumerate_laman
from laman.data import LAMAN_GRAPH_COUNTS


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()

    print(f"{'n':>3} {'graphs':>10} {'published':>10} {'ok':>4} {'seconds':>8}")
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        count = sum(1 for _ in enumerate_laman(n, cap=max(n, 10), threads=args.threads))
        ref = LAMAN_GRAPH_COUNTS.get(n)
        ok = "yes" if count == ref else "NO"
        print(f"{n:>3} {count:>10} {ref!s:>10} {ok:>4} {time.perf_counter() - t0:>8.2f}", flush=True)


if __name__ == "__main__":
    main()
