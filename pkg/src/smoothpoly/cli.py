"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 incomplete search
(classification budget or triangulation budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .appendix import appendix_fans
from .classify import (
    Budget,
    ClassificationResult,
    SeedFanSet,
    classify,
    default_jobs,
    minimal_smooth_2fans,
    seed_param_bound,
)
from .cones import fan_is_smooth, hilbert_basis, is_smooth, is_very_ample, polytope_multiplicity
from .equivalence import canonical_form, dedup_classes
from .fixtures import bruns_polytope, fibonacci_polygon, hirzebruch_trapezoid, reeve_simplex
from .io import (
    ClassRecord,
    FormatError,
    dumps,
    form_id,
    polytope_to_obj,
    read_cones,
    read_fans,
    read_polytopes,
    write_records,
)
from .polytope import LatticePolytope, normalized_volume
from .triangulation import find_flag_unimodular_regular, is_unimodular_triangulation, pulling_triangulation

EXIT_OK, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2

# column layout of the published tables; the last column collects the rest
TABLE_COLUMNS = {2: [3, 4, 5, 6, 7, 8], 3: [4, 6, 8]}


def histogram_table(dim: int, hist: dict[int, int]) -> str:
    cols = TABLE_COLUMNS.get(dim) or sorted(hist)
    # simple 3-polytopes have an even number of vertices
    rest_from = cols[-1] + (2 if dim == 3 else 1)
    rest = sum(n for v, n in hist.items() if v > cols[-1])
    head = ["Vertices"] + [str(c) for c in cols] + [f">={rest_from}"]
    row = ["Polygons" if dim == 2 else "Polytopes"] + [str(hist.get(c, 0)) for c in cols] + [str(rest)]
    width = max(len(head[0]), len(row[0]))

    def fmt(cells):
        return cells[0].ljust(width) + " | " + "  ".join(c.rjust(4) for c in cells[1:])

    return "\n".join([fmt(head), "-" * len(fmt(head)), fmt(row)])


def histogram_line(dim: int, hist: dict[int, int]) -> str:
    keys = sorted(set(TABLE_COLUMNS.get(dim, [])) | set(hist))
    return " ".join(f"{k}:{hist.get(k, 0)}" for k in keys)


def records_from_result(result: ClassificationResult, tri_budget: int) -> list[ClassRecord]:
    records = []
    for c in result.classes:
        p = c.polytope
        flags = {"smooth": is_smooth(p), "very_ample": is_very_ample(p)}
        if tri_budget > 0:
            flags["flag_triangulation_found"] = find_flag_unimodular_regular(p, tri_budget) is not None
        records.append(
            ClassRecord(
                id=form_id(c.form.dim, c.form.vertices),
                dim=c.form.dim,
                num_vertices=c.num_vertices,
                num_lattice_points=c.num_lattice_points,
                vertices=[list(v) for v in c.form.vertices],
                source_fan=c.source_fan,
                flags=flags,
            )
        )
    return sorted(records, key=ClassRecord.sort_key)


def _load_seeds(source: str | None, dim: int, max_points: int, max_param: int | None):
    if source is None:
        if dim != 2:
            raise FormatError("dimension 3 needs --seeds (a fan file or 'appendix_fans')")
        return minimal_smooth_2fans(seed_param_bound(max_points) if max_param is None else max_param)
    if source == "appendix_fans":
        fans = [f for f in appendix_fans() if f.dim == dim]
        return SeedFanSet(tuple(fans), tuple(f"appendix-{i}" for i in range(len(fans))), "file")
    fans = read_fans(source)
    for i, f in enumerate(fans):
        if f.dim != dim or not fan_is_smooth(f):
            raise FormatError(f"seed {i} is not a smooth fan of dimension {dim}", None, source)
    return SeedFanSet(tuple(fans), tuple(f"{Path(source).name}-{i}" for i in range(len(fans))), "file")


def cmd_classify(args) -> int:
    seeds = _load_seeds(args.seeds, args.dim, args.max_points, args.max_param)
    budget = Budget(max_fans=args.budget, jobs=args.jobs)
    result = classify(args.dim, args.max_points, seeds, budget)
    records = records_from_result(result, args.tri_budget)
    header = None
    if not result.complete:
        header = f"incomplete: fan budget {args.budget} exhausted after {result.stats['fans_explored']} fans"
    hist = result.histogram()
    report = [
        histogram_table(args.dim, hist),
        histogram_line(args.dim, hist),
        f"classes: {len(records)}  fans explored: {result.stats['fans_explored']}  "
        f"rhs tested: {result.stats['rhs_tested']}  pruned: {result.stats['pruned']}",
    ]
    if header:
        report.append(header)
    if args.out:
        write_records(records, args.out, header)
        print("\n".join(report))
    else:
        sys.stdout.write(write_records(records, None, header))
        print("\n".join(report), file=sys.stderr)
    return EXIT_OK if result.complete else EXIT_INCOMPLETE


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def polytope_report(p: LatticePolytope) -> dict:
    full = p.is_full_dimensional
    try:
        mult = polytope_multiplicity(p) if full else None
    except ValueError:
        mult = None
    return {
        "points": len(p.lattice_points),
        "vertices": len(p.vertices),
        "volume": normalized_volume(p),
        "smooth": is_smooth(p) if full else None,
        "very_ample": is_very_ample(p) if full else None,
        "mult": mult,
    }


def _format_report(r: dict) -> str:
    def show(v):
        if v is None:
            return "n/a"
        return _yes(v) if isinstance(v, bool) else str(v)

    return (
        f"smooth: {show(r['smooth'])}, very ample: {show(r['very_ample'])}, mult: {show(r['mult'])}, "
        f"points: {r['points']}, vertices: {r['vertices']}, volume: {r['volume']}"
    )


def cmd_verify(args) -> int:
    polys = read_polytopes(args.file)
    for i, p in enumerate(polys):
        print(f"[{i}] {_format_report(polytope_report(p))}")
    classes = dedup_classes(polys)
    print(f"{len(classes)} classes for {len(polys)} inputs")
    return EXIT_OK


def cmd_hilbert(args) -> int:
    for c in read_cones(args.file):
        print(dumps({"generators": [list(g) for g in c.generators], "hilbert_basis": [list(h) for h in hilbert_basis(c)]}))
    return EXIT_OK


def cmd_canonical(args) -> int:
    for p in read_polytopes(args.file):
        form = canonical_form(p)
        print(dumps({"dim": form.dim, "vertices": [list(v) for v in form.vertices]}))
    return EXIT_OK


def cmd_triangulate(args) -> int:
    status = EXIT_OK
    for p in read_polytopes(args.file):
        if args.flag_check:
            hit = find_flag_unimodular_regular(p, args.budget, args.seed, args.jobs)
            if hit is None:
                print("no-certificate-within-budget")
                status = EXIT_INCOMPLETE
                continue
            t, _ = hit
        else:
            t = pulling_triangulation(p)
        rec = t.to_dict()
        rec["unimodular"] = is_unimodular_triangulation(t)
        print(dumps(rec))
    return status


def cmd_examples(args) -> int:
    extra = {}
    if args.family == "reeve":
        p = reeve_simplex(args.k)
    elif args.family == "bruns":
        p = bruns_polytope(args.k)
    elif args.family == "fibonacci":
        p = fibonacci_polygon(args.k)
    else:
        p, marked = hirzebruch_trapezoid(args.k)
        extra["marked"] = [list(m) for m in marked]
    print(dumps(polytope_to_obj(p) | extra))
    print(_format_report(polytope_report(p)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smoothpoly", description="Smooth lattice polytopes with few lattice points.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log search progress")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify smooth polytopes by number of lattice points")
    c.add_argument("--dim", type=int, choices=(2, 3), required=True)
    c.add_argument("--max-points", type=int, required=True)
    c.add_argument("--seeds", help="fan file, or 'appendix_fans' for the normal fans of the tabulated polytopes")
    c.add_argument("--max-param", type=int, help="largest Hirzebruch parameter among 2D seeds (default: the largest one that can still matter)")
    c.add_argument("--out", help="write records here instead of stdout")
    c.add_argument("--jobs", type=int, default=default_jobs())
    c.add_argument("--budget", type=int, default=Budget().max_fans, help="maximum number of fans to explore")
    c.add_argument("--tri-budget", type=int, default=200, help="pulling orders tried per class when checking for a flag triangulation (0 skips)")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="report invariants of every polytope in a file")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hilbert", help="Hilbert basis of the cones in a file")
    h.add_argument("file")
    h.set_defaults(func=cmd_hilbert)

    n = sub.add_parser("canonical", help="canonical form of the polytopes in a file")
    n.add_argument("file")
    n.set_defaults(func=cmd_canonical)

    t = sub.add_parser("triangulate", help="pulling triangulation or flag unimodular certificate")
    t.add_argument("file")
    t.add_argument("--flag-check", action="store_true")
    t.add_argument("--budget", type=int, default=100_000)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--jobs", type=int, default=default_jobs())
    t.set_defaults(func=cmd_triangulate)

    e = sub.add_parser("examples", help="emit a named example polytope with a property report")
    e.add_argument("family", choices=("reeve", "bruns", "fibonacci", "hirzebruch"))
    e.add_argument("--k", type=int, default=1)
    e.set_defaults(func=cmd_examples)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (FormatError, OSError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
