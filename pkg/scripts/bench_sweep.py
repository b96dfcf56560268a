#!/usr/bin/env python3
"""Sweep the bench grids at a few seeds and summarize the ratio trend.

The CSV from `kdelete bench` has one row per (graph, k); this script runs
the grid in-process across seeds, groups rows by family and k, and prints
the worst observed deleted/bound ratio per group so a drifting constant
would stick out.  Purely informational: the per-run ceilings are already
asserted inside the partitioners.
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from kdelete.cli import _bench_grid, bench_point  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="all",
                    choices=("all", "c5blowup", "turan", "oddcycle"))
    ap.add_argument("--seeds", type=int, default=3,
                    help="number of seeds to sweep (0, 1, ...)")
    ap.add_argument("--out", default=None, help="write the raw CSV here too")
    args = ap.parse_args()

    rows = []
    for seed in range(args.seeds):
        for point in _bench_grid(args.family, seed):
            rows.append((seed,) + bench_point(point))

    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["seed", "n", "k", "r", "method", "deleted",
                             "bound", "ratio", "seconds"])
            writer.writerows(rows)

    worst = defaultdict(float)
    for seed, n, k, r, method, deleted, bound, ratio, seconds in rows:
        worst[(method, k)] = max(worst[(method, k)], ratio)
    print(f"{'method':>14} {'k':>4} {'worst ratio':>12}")
    for (method, k), ratio in sorted(worst.items()):
        print(f"{method:>14} {k:>4} {ratio:>12.6f}")
    bad = [key for key, ratio in worst.items() if ratio > 1.0]
    if bad:
        print(f"ratio above 1 for {bad} -- a proved ceiling was exceeded",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
