"""Find a flag unimodular pulling triangulation for every tabulated 3-polytope and replay it.

Writes one JSON line per polytope with the pulling order that serves as certificate.

    python scripts/verify_certificates.py [--budget N] [--seed S] [--out FILE]
"""

import argparse
import sys

from smoothpoly.appendix import appendix_polytopes3
from smoothpoly.io import dumps
from smoothpoly.triangulation import (
    check_triangulation,
    find_flag_unimodular_regular,
    is_flag,
    is_unimodular_triangulation,
    pulling_triangulation,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="certificate file (default stdout)")
    args = ap.parse_args()

    lines, failures = [], []
    for i, p in enumerate(appendix_polytopes3()):
        hit = find_flag_unimodular_regular(p, args.budget, args.seed)
        if hit is None:
            failures.append(i)
            print(f"polytope {i} {list(p.vertices)}: no certificate within {args.budget} orders", file=sys.stderr)
            continue
        _, order = hit
        t = pulling_triangulation(p, order)
        ok = is_unimodular_triangulation(t) and is_flag(t) and not check_triangulation(p, t)
        if not ok:
            failures.append(i)
        lines.append(dumps({"index": i, "vertices": [list(v) for v in p.vertices], "order": [list(x) for x in order],
                            "simplices": len(t.simplices), "verified": ok}))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{len(lines) - len(failures)}/{len(appendix_polytopes3())} certificates verified", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
