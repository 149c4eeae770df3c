"""Command-line front end.

Subcommands:
    gen     generate one seeded unit disk graph, write JSON
    run     execute a sweep config, write instances.csv / summary.csv
            (and tradeoff.csv when >= 2 schemes are configured)
    verify  check a backbone file against a graph file (exit 2 on FAIL)
    plot    render a panel SVG from a summary CSV

Exit codes: 0 success, 1 usage/config error, 2 verification failure.
Every command is deterministic for fixed inputs.  CDSBENCH_THREADS caps
sweep parallelism (0 = auto, default 1).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness, plotting
from .backbone import ALL_SCHEMES, Backbone, verify_cds
from .metrics import max_stretch
from .udg import ConnectivityError, UdgSpec, UnitDiskGraph, generate_udg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdsbench",
        description="Connected dominating set benchmark suite on unit disk graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a connected unit disk graph")
    p_gen.add_argument("--nodes", type=int, required=True)
    p_gen.add_argument("--range", type=float, required=True, dest="range_")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--area-min", type=float, default=20.0)
    p_gen.add_argument("--area-max", type=float, default=500.0)
    p_gen.add_argument("--max-attempts", type=int, default=10_000)
    p_gen.add_argument("--out", type=Path, required=True)

    p_run = sub.add_parser("run", help="run a sweep from a JSON config")
    p_run.add_argument("--config", type=Path, required=True)
    p_run.add_argument("--outdir", type=Path, default=Path("."))

    p_verify = sub.add_parser("verify", help="audit a backbone against a graph")
    p_verify.add_argument("--graph", type=Path, required=True)
    p_verify.add_argument("--backbone", type=Path, required=True)

    p_plot = sub.add_parser("plot", help="render a panel SVG from a summary CSV")
    p_plot.add_argument("--input", type=Path, required=True)
    p_plot.add_argument("--metric", choices=plotting.PLOT_METRICS, required=True)
    p_plot.add_argument(
        "--panels",
        type=str,
        default="10,20,30,40",
        help="comma-separated transmission ranges, one panel each",
    )
    p_plot.add_argument(
        "--series",
        type=str,
        default=",".join(ALL_SCHEMES),
        help="comma-separated scheme identifiers",
    )
    p_plot.add_argument("--out", type=Path, required=True)
    return parser


def _cmd_gen(args) -> int:
    spec = UdgSpec(args.nodes, args.range_, args.area_min, args.area_max, args.seed)
    try:
        graph = generate_udg(spec, max_attempts=args.max_attempts)
    except ConnectivityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    args.out.write_text(graph.to_json(), encoding="utf-8")
    print(f"nodes: {graph.n}")
    print(f"edges: {graph.edge_count}")
    return 0


def _cmd_run(args) -> int:
    try:
        config = harness.SweepConfig.from_json(args.config.read_text(encoding="utf-8"))
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 1
    except harness.ConfigError as exc:
        print(f"error: {args.config}: {exc}", file=sys.stderr)
        return 1
    result = harness.run_sweep(config)
    args.outdir.mkdir(parents=True, exist_ok=True)
    harness.write_instances_csv(result, args.outdir / "instances.csv")
    harness.write_summary_csv(result, args.outdir / "summary.csv")
    if len(config.schemes) >= 2:
        harness.write_tradeoff_csv(
            harness.summarize_tradeoff(result), args.outdir / "tradeoff.csv"
        )
    infeasible = sum(1 for row in result.summary_rows if row.status != harness.STATUS_OK)
    print(f"grid points: {len(config.node_counts) * len(config.ranges)}")
    print(f"instance rows: {len(result.instance_rows)}")
    if infeasible:
        print(f"infeasible (n, r, scheme) rows: {infeasible}")
    return 0


def _cmd_verify(args) -> int:
    graph = UnitDiskGraph.from_json(args.graph.read_text(encoding="utf-8"))
    backbone = Backbone.from_json(args.backbone.read_text(encoding="utf-8"))
    dset = set(backbone.nodes)

    dominated = bool(dset) and all(
        v in dset or any(u in dset for u in graph.adjacency[v]) for v in range(graph.n)
    )
    connected = verify_cds(graph, dset) if dominated else False
    checks = [("domination", dominated), ("connectivity", connected)]
    if dominated and connected:
        stretch = max_stretch(graph, dset)
        checks.append(("stretch 5x audit", stretch <= 5.0))
        checks.append(("stretch 7x audit", stretch <= 7.0))
        print(f"max stretch: {stretch:.4f}")
    else:
        checks.append(("stretch 5x audit", False))
        checks.append(("stretch 7x audit", False))
    failed = False
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failed = failed or not ok
    return 2 if failed else 0


def _cmd_plot(args) -> int:
    try:
        rows = harness.read_summary_csv(args.input)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 1
    try:
        spec = plotting.PlotSpec(
            metric=args.metric,
            panels=tuple(float(p) for p in args.panels.split(",") if p != ""),
            series=tuple(s for s in args.series.split(",") if s != ""),
            input_path=str(args.input),
            output_path=str(args.out),
        )
        svg = plotting.render_plot(rows, spec)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    args.out.write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "run": _cmd_run,
        "verify": _cmd_verify,
        "plot": _cmd_plot,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
