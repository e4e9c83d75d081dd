"""Rerun both classifications and print the vertex histograms as tables.

    python scripts/reproduce_tables.py [--jobs N] [--out-dir DIR]
"""

import argparse
import time
from pathlib import Path

from smoothpoly.appendix import appendix_fans
from smoothpoly.classify import Budget, classify, minimal_smooth_2fans, seed_param_bound
from smoothpoly.cli import histogram_line, histogram_table, records_from_result
from smoothpoly.io import write_records


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-points", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, help="also write the class databases here")
    args = ap.parse_args()

    runs = [
        (2, minimal_smooth_2fans(seed_param_bound(args.max_points))),
        (3, appendix_fans()),
    ]
    for dim, seeds in runs:
        start = time.perf_counter()
        result = classify(dim, args.max_points, seeds, Budget(jobs=args.jobs))
        hist = result.histogram()
        print(histogram_table(dim, hist))
        print(histogram_line(dim, hist))
        print(f"{len(result.classes)} classes, {result.stats['fans_explored']} fans, "
              f"complete: {result.complete}, {time.perf_counter() - start:.1f}s\n")
        if args.out_dir:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            write_records(records_from_result(result, tri_budget=0), args.out_dir / f"smooth{dim}d.jsonl")


if __name__ == "__main__":
    main()
