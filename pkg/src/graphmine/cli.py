"""Command-line front door.

Every run ends with one summary line ``solutions=<N> time_ms=<t>`` on
stdout; verbs may print extra key=value lines before it and write CSV or
stream files. Exit codes: 0 success, 2 usage error, 1 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time

from . import amortized, baseline, cage, densest, oracle, temporal
from .core import read_edge_list
from .errors import EdgeListError, GraphmineError, UsageError


def emit_csv(rows, header, path) -> None:
    """Plain comma-separated output: header then data rows, decimal
    points, no locale formatting."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)


def parse_csv(path) -> list[list[str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


def timing_report(solutions: int, wall_ms: float) -> dict:
    rate = 0.0 if wall_ms <= 0 else solutions / (wall_ms / 1000.0)
    return {"wall_ms": wall_ms, "solutions_per_sec": rate}


class _Run:
    """Tracks the summary counters for one dispatch."""

    def __init__(self):
        self.t0 = time.monotonic()
        self.solutions = 0

    def finish(self) -> None:
        wall_ms = int(round((time.monotonic() - self.t0) * 1000))
        print(f"solutions={self.solutions} time_ms={wall_ms}")


def _add_common(p, temporal_input=False):
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--threads", type=int, default=1,
                   help="worker cap (current implementation is sequential)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="graphmine",
        description="graphlet enumeration, temporal cores, densest subgraphs")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("graphlets", help="enumerate k-graphlets")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["ks", "amortized", "cage"],
                   default="cage")
    p.add_argument("--depth", type=int, default=3,
                   help="cage recursion cutoff (1..3)")
    p.add_argument("--mode", choices=["count", "list", "compressed"],
                   default="count")
    p.add_argument("--output", help="solution/record stream file")

    p = sub.add_parser("graphlets-all",
                       help="enumerate connected induced subgraphs of "
                            "every size")
    _add_common(p)
    p.add_argument("--mode", choices=["count", "list"], default="count")
    p.add_argument("--output")

    p = sub.add_parser("edge-graphlets",
                       help="connected subgraphs of exactly k edges")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["count", "list"], default="count")
    p.add_argument("--output")

    p = sub.add_parser("coreness", help="static coreness of every vertex")
    _add_common(p)
    p.add_argument("--csv", help="write node,coreness rows")

    p = sub.add_parser("temporal-resilience",
                       help="ARCD series and falling-point classes")
    _add_common(p)
    p.add_argument("--bucket-width", type=int, default=1)
    p.add_argument("--h-policy", choices=["one", "half", "full"],
                   default="half")
    p.add_argument("--csv", default="resilience.csv")
    p.add_argument("--classes-csv")
    p.add_argument("--epsilon-zero", type=float, default=1e-9)

    p = sub.add_parser("khd-core", help="(k,h,W)-cores over all windows")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--bucket-width", type=int, default=1)
    p.add_argument("--csv", default="cores.csv")

    p = sub.add_parser("densest",
                       help="(1+eps)-approximate densest subgraph")
    _add_common(p)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--b-override", type=int)
    p.add_argument("--emit-ladder", help="CSV: i,threshold,set_size,"
                                         "induced_density")
    p.add_argument("--emit-witness", help="vertex list, original labels")

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("kind", choices=["graphlets", "coreness", "densest"])
    _add_common(p)
    p.add_argument("--k", type=int)

    p = sub.add_parser("decompress", help="expand a compressed stream")
    p.add_argument("--input", required=True, help="record stream file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output")

    return ap


def _open_out(path):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _label_line(labels, sol) -> str:
    return " ".join(str(x) for x in sorted(int(labels[v]) for v in sol))


def _cmd_graphlets(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    if args.mode == "compressed" and args.algo != "cage":
        raise UsageError("--mode compressed requires --algo cage")
    if args.mode == "compressed" and args.k <= 3:
        raise UsageError("--mode compressed requires k > 3")
    out = _open_out(args.output) if args.mode != "count" else None
    try:
        if args.mode == "list":
            labels = g.labels

            def sink(sol):
                out.write(_label_line(labels, sol) + "\n")
        else:
            sink = None
        if args.algo == "ks":
            if args.mode == "compressed":
                raise UsageError("--mode compressed requires --algo cage")
            stats = baseline.ks_enumerate(g, args.k, sink=sink)
        elif args.algo == "amortized":
            stats = amortized.amortized_enum(g, args.k, sink=sink)
        else:
            writer = out if args.mode == "compressed" else None
            if writer is not None:
                for rec in cage.cage_records(g, args.k, args.depth,
                                             use_labels=True):
                    writer.write(cage.format_record(rec) + "\n")
                stats = cage.cage_enumerate(g, args.k, args.depth)
            else:
                stats = cage.cage_enumerate(g, args.k, args.depth, sink=sink)
        run.solutions = stats.solutions
        report = baseline.failure_leaf_report(stats)
        print(f"leaves={report['total_leaves']} "
              f"failure_leaves={report['failure_leaves']} "
              f"failure_pct={report['failure_pct']:.2f} "
              f"calls={stats.recursive_calls}")
    finally:
        if out is not None and out is not sys.stdout:
            out.close()


def _cmd_graphlets_all(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    out = _open_out(args.output) if args.mode == "list" else None
    try:
        sink = None
        if args.mode == "list":
            labels = g.labels

            def sink(sol):
                out.write(_label_line(labels, sol) + "\n")
        run.solutions = amortized.enum_all_graphlets(g, sink=sink)
    finally:
        if out is not None and out is not sys.stdout:
            out.close()


def _cmd_edge_graphlets(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    out = _open_out(args.output) if args.mode == "list" else None
    try:
        sink = None
        if args.mode == "list":
            labels = g.labels

            def sink(sol):
                pairs = sorted(tuple(sorted((int(labels[u]), int(labels[v]))))
                               for u, v in sol)
                out.write("  ".join(f"{u} {v}" for u, v in pairs) + "\n")
        run.solutions = amortized.edge_graphlets(g, args.k, sink=sink)
    finally:
        if out is not None and out is not sys.stdout:
            out.close()


def _cmd_coreness(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    core = temporal.coreness_fast(g)
    run.solutions = g.n
    if args.csv:
        rows = [(int(g.labels[v]), core[v]) for v in range(g.n)]
        emit_csv(rows, ["node", "coreness"], args.csv)
    kmax = max(core.values(), default=0)
    print(f"n={g.n} m={g.m} k_max={kmax}")


def _cmd_temporal_resilience(args, run: _Run) -> None:
    raw = read_edge_list(args.input, temporal=True)
    gt = temporal.bucket_snapshots(raw, args.bucket_width)
    if gt.tau < 2:
        raise UsageError("need at least 2 snapshots for a resilience "
                         "series; shrink --bucket-width")
    series = temporal.arcd_series(gt, args.h_policy)
    labels = raw.labels
    rows = [(int(labels[r.node]), r.window, r.h, f"{r.arcd:.6f}")
            for r in series]
    emit_csv(rows, ["node", "W", "h", "arcd"], args.csv)
    run.solutions = len(rows)
    if args.classes_csv:
        classes = temporal.falling_points(series, args.epsilon_zero)
        crow = [(int(labels[v]), ("inf" if math.isinf(w) else int(w)))
                for v, w in sorted(classes.items())]
        emit_csv(crow, ["node", "falling_W"], args.classes_csv)
    print(f"tau={gt.tau} nodes={gt.node_universe} windows="
          f"{temporal.window_grid(gt.tau)}")


def _cmd_khd_core(args, run: _Run) -> None:
    raw = read_edge_list(args.input, temporal=True)
    gt = temporal.bucket_snapshots(raw, args.bucket_width)
    if gt.tau == 0:
        raise UsageError("empty temporal graph")
    cores = temporal.khd_cores(gt, args.k, args.h, args.window)
    labels = raw.labels
    rows = []
    for (a, b), members in cores:
        for v in sorted(members):
            rows.append((a, b, args.h, args.k, int(labels[v])))
    emit_csv(rows, ["window_start", "window_end", "h", "k", "vertex"],
             args.csv)
    run.solutions = len(rows)
    print(f"tau={gt.tau} windows={gt.tau - args.window + 1} "
          f"nonempty={sum(1 for _, m in cores if m)}")


def _cmd_densest(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    if g.m == 0:
        raise UsageError("graph has no edges")
    state, params = densest.orient_graph(g, args.epsilon, args.b_override)
    est = densest.density_estimate(state, params)
    result = densest.densest_subgraph(state, params)
    print(f"b={params.b} estimate={est:.6f}")
    print(f"witness_size={len(result.vertices)} "
          f"witness_density={result.density:.6f}")
    if args.emit_ladder:
        rows = []
        for i, (thr, tier) in enumerate(densest.density_ladder(state,
                                                               params)):
            d = densest.induced_density(state, tier)
            rows.append((i, f"{thr:.6f}", len(tier), f"{float(d):.6f}"))
        emit_csv(rows, ["i", "threshold", "set_size", "induced_density"],
                 args.emit_ladder)
    if args.emit_witness:
        with open(args.emit_witness, "w", encoding="utf-8") as fh:
            for v in sorted(result.vertices):
                fh.write(f"{g.labels[v]}\n")
    run.solutions = len(result.vertices)


def _cmd_oracle(args, run: _Run) -> None:
    g = read_edge_list(args.input)
    if args.kind == "graphlets":
        if args.k is None:
            raise UsageError("oracle graphlets needs --k")
        res = oracle.brute_k_graphlets(g, args.k)
        run.solutions = res.count
    elif args.kind == "coreness":
        core = oracle.peel_coreness(g)
        run.solutions = g.n
        print(f"k_max={max(core.values(), default=0)}")
    else:
        rho, witness = oracle.brute_densest(g)
        print(f"density={float(rho):.6f} witness_size={len(witness)}")
        run.solutions = len(witness)


def _cmd_decompress(args, run: _Run) -> None:
    out = _open_out(args.output)
    try:
        with open(args.input, encoding="utf-8") as fh:
            for sol in cage.decompress_records(fh, args.k):
                out.write(" ".join(str(v) for v in sol) + "\n")
                run.solutions += 1
    finally:
        if out is not sys.stdout:
            out.close()


_COMMANDS = {
    "graphlets": _cmd_graphlets,
    "graphlets-all": _cmd_graphlets_all,
    "edge-graphlets": _cmd_edge_graphlets,
    "coreness": _cmd_coreness,
    "temporal-resilience": _cmd_temporal_resilience,
    "khd-core": _cmd_khd_core,
    "densest": _cmd_densest,
    "oracle": _cmd_oracle,
    "decompress": _cmd_decompress,
}


def dispatch(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    run = _Run()
    try:
        _COMMANDS[args.verb](args, run)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, EdgeListError, GraphmineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    run.finish()
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
