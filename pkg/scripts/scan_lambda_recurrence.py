#!/usr/bin/env python3
"""Scan the lambda-class recurrence

    |R_{n,k}[lambda=i]| = (n-2) |R_{n-1,k}[lambda=i]| + (n+k-3) |R_{n-1,k-1}[lambda=i]|

to as high an n as patience allows, printing per-n timing and the table for
the last size.  The identity is only verified finitely; this script is the
experiment for pushing the frontier (n=9 is ~4.3e7 trees, roughly an hour).
"""

import argparse
import time

from ramapoly.polynomials import f
from ramapoly.verify import double_factorial, lambda_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--show-table", action="store_true")
    args = ap.parse_args()

    prev = None
    for n in range(2, args.nmax + 1):
        t0 = time.perf_counter()
        tab = lambda_table(n)
        dt = time.perf_counter() - t0
        bad = []
        if n >= 3 and prev is not None:
            for i in range(1, n - 1):
                for k in range(n):
                    want = (n - 2) * prev.get((k, i), 0) + (n + k - 3) * prev.get((k - 1, i), 0)
                    if tab.get((k, i), 0) != want:
                        bad.append((k, i, want, tab.get((k, i), 0)))
        edge = all(tab.get((k, n - 1), 0) == f(n - 1, k - 1) for k in range(1, n))
        allk = sum(c for (k, _), c in tab.items() if k == n - 1)
        leafy = double_factorial(2 * n - 3) - allk  # all-improper trees with a max leaf
        status = "ok" if not bad and edge else f"MISMATCH {bad[:3]}"
        print(f"n={n}: {sum(tab.values())} trees with an internal max, "
              f"{dt:.1f}s, recurrence {status}, max-leaf all-improper {leafy}")
        if args.show_table and n == args.nmax:
            for i in range(1, n):
                row = [str(tab.get((k, i), 0)) for k in range(1, n)]
                print(f"  lambda={i}: " + " ".join(row))
        prev = tab


if __name__ == "__main__":
    main()
