"""Command-line front end: ``det``, ``formula``, ``verify``, ``gen``, ``bench``."""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import formulas
from .graph import (
    GraphError,
    distance_matrix,
    from_edge_list,
    generate_cycle,
    generate_gpqn,
    generate_infinity,
    generate_path,
    plant_random_trees,
    random_tree,
)
from .linalg import det_bareiss
from .suites import SUITE_NAMES, run_suite


def _write_dot(g, path):
    if path:
        Path(path).write_text(g.to_dot())


def cmd_det(args) -> int:
    g = from_edge_list(Path(args.path).read_text())
    _write_dot(g, args.dot)
    print(det_bareiss(distance_matrix(g)))
    return 0


def cmd_formula(args) -> int:
    value = formulas.formula_for(args.family, *args.params)
    print(value)
    if args.family == "bicyclic":
        p, q, n = args.params
        print(f"order {p + q - 1 + n}")
    return 0


GEN_ARITY = {"cycle": 1, "path": 1, "tree": 1, "infinity": 3, "gpqn": 3, "random-bicyclic": 2}


def cmd_gen(args) -> int:
    fam, ps = args.family, args.params
    if len(ps) != GEN_ARITY[fam]:
        raise ValueError(f"{fam} takes {GEN_ARITY[fam]} parameter(s), got {len(ps)}")
    if fam == "cycle":
        g = generate_cycle(*ps)
    elif fam == "path":
        g = generate_path(*ps)
    elif fam == "tree":
        g = random_tree(ps[0], args.seed)
    elif fam == "infinity":
        g = generate_infinity(*ps)
    elif fam == "gpqn":
        g = generate_gpqn(*ps)
    else:
        p, q = ps
        g = plant_random_trees(generate_infinity(p, args.k, q), args.extra, args.seed)
    _write_dot(g, args.dot)
    sys.stdout.write(g.to_edge_list())
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, count=args.count,
                       max_order=args.max_order, jobs=args.jobs)
    sys.stdout.write(report.to_json(timing=args.timing))
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    if not report.ok:
        print(f"{report.mismatches} of {report.total} instances mismatched", file=sys.stderr)
        return 1
    return 0


def bench_rows(max_order: int, reps: int, samples: int = 12):
    """Median Bareiss time on ``G(3, 3; n)`` for a spread of orders up to ``max_order``."""
    step = max(1, (max_order - 5) // (samples - 1))
    orders = list(range(5, max_order + 1, step))
    if orders[-1] != max_order:
        orders.append(max_order)
    rows = []
    for order in orders:
        n = order - 5
        dm = distance_matrix(generate_gpqn(3, 3, n))
        times, value = [], None
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            value = det_bareiss(dm)
            times.append((time.perf_counter_ns() - t0) / 1000)
        rows.append((order, 3, 3, n, value, round(statistics.median(times))))
    return rows


def cmd_bench(args) -> int:
    if args.max_order < 5:
        raise ValueError("--max-order must be >= 5")
    lines = ["order,p,q,n,det,median_micros"]
    lines += [",".join(map(str, r)) for r in bench_rows(args.max_order, args.reps)]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.csv:
        Path(args.csv).write_text(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distdet", description="Exact distance-matrix determinants of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="determinant of the distance matrix of an edge-list file")
    p.add_argument("path")
    p.add_argument("--dot", help="also write the graph in DOT format")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("formula", help="evaluate a closed-form determinant")
    p.add_argument("family", choices=["tree", "unicyclic", "bicyclic"])
    p.add_argument("params", nargs="+", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run a seeded verification suite, JSON report on stdout")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-order", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="also write a CSV report")
    p.add_argument("--timing", action="store_true", help="include per-instance timings in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("family", choices=list(GEN_ARITY))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extra", type=int, default=0, help="random-bicyclic: planted tree vertices")
    p.add_argument("--k", type=int, default=1, help="random-bicyclic: connecting-path parameter")
    p.add_argument("--dot", help="also write the graph in DOT format")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the determinant kernel, CSV on stdout")
    p.add_argument("--max-order", type=int, default=40)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as e:
        print(f"distdet: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
