"""Command-line interface.

Subcommands: generate, the six centrality methods (psp-/mc-/exact- times
harmonic/betweenness), compare, and reproduce. Every stochastic subcommand
takes --seed and is fully reproducible under it; all subcommands exit
nonzero with a one-line diagnostic on error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time


from . import experiments, scores_io
from .evaluation import CSV_COLUMNS, ExperimentReport, compute_centrality, mae, scc
from .generators import GenSpec, generate
from .graph_model import load_graph, save_graph
from .possible_worlds import DEFAULT_ENUMERATION_CAP

WORKERS_ENV = "PSP_CENTRALITY_WORKERS"

CENTRALITY_METHODS = (
    "psp-harmonic",
    "psp-betweenness",
    "mc-harmonic",
    "mc-betweenness",
    "exact-harmonic",
    "exact-betweenness",
)


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psp-centrality",
        description="Centrality estimation on uncertain graphs via possible shortest paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a random uncertain graph")
    gen_sub = gen.add_subparsers(dest="model", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of nodes")
    common.add_argument(
        "--prob",
        choices=["uniform", "beta", "constant"],
        default="uniform",
        help="edge-probability law (uniform on [0,1], Beta(4,4), or constant)",
    )
    common.add_argument(
        "--prob-value", type=float, default=1.0, help="value for --prob constant"
    )
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-o", "--output", required=True, help="output edge-list path")
    er = gen_sub.add_parser("er", parents=[common], help="Erdős-Rényi G(n, p)")
    er.add_argument("--p", type=float, required=True, help="pair probability in [0,1]")
    ba = gen_sub.add_parser("ba", parents=[common], help="preferential attachment")
    ba.add_argument("--m", type=int, required=True, help="edges per new node (1 <= m < n)")
    rh = gen_sub.add_parser("rh", parents=[common], help="random hyperbolic threshold graph")
    rh.add_argument("--k", type=float, required=True, help="target average degree")
    rh.add_argument("--gamma", type=float, required=True, help="power-law exponent (> 2)")

    for method in CENTRALITY_METHODS:
        cmd = sub.add_parser(method, help=f"compute {method} scores")
        cmd.add_argument("graph", help="input edge-list file")
        cmd.add_argument("-o", "--output", required=True, help="output scores file")
        if method.startswith("psp-"):
            cmd.add_argument("--phi", type=float, default=0.8,
                             help="exploration threshold in [0,1] (default 0.8)")
            cmd.add_argument("--workers", type=int, default=None)
        elif method.startswith("mc-"):
            default_samples = 73777 if method == "mc-harmonic" else 100000
            cmd.add_argument("--samples", type=int, default=default_samples,
                             help=f"number of sampled instances (default {default_samples})")
            cmd.add_argument("--seed", type=int, default=0)
            cmd.add_argument("--workers", type=int, default=None)
        else:
            cmd.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                             help="max number of uncertain edges to enumerate")

    comp = sub.add_parser("compare", help="compare two score files (MAE, SCC)")
    comp.add_argument("scores_a")
    comp.add_argument("scores_b")
    comp.add_argument("--format", choices=["json", "csv"], default="json")
    comp.add_argument("-o", "--output", default=None, help="write report here instead of stdout")

    rep = sub.add_parser("reproduce", help="run a canned experiment suite")
    rep_sub = rep.add_subparsers(dest="suite", required=True)
    fig = rep_sub.add_parser("figure-examples",
                             help="worked 4-node examples for the estimated distributions")
    fig.add_argument("--phi", type=float, default=0.8)
    fig.add_argument("--out-dir", required=True)
    sweep = rep_sub.add_parser("random-graph-sweep",
                               help="MAE/SCC of the heuristics vs Monte Carlo over a phi grid")
    sweep.add_argument("--out-dir", required=True)
    sweep.add_argument("--graphs-per-cell", type=int, default=3)
    sweep.add_argument("--n", type=int, default=100)
    sweep.add_argument("--samples", type=int, default=10000,
                       help="Monte Carlo ground-truth samples per graph (default 10000)")
    sweep.add_argument("--phi-grid", type=str, default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0")
    sweep.add_argument("--seed", type=int, default=2023)
    sweep.add_argument("--jobs", type=int, default=None,
                       help="parallel graph jobs (default: worker count)")
    return parser


def _cmd_generate(args, parser) -> int:
    prob_dist = {
        "uniform": "uniform01",
        "beta": "beta44",
        "constant": f"constant:{args.prob_value}",
    }[args.prob]
    spec = GenSpec(
        model=args.model,
        n=args.n,
        p=getattr(args, "p", None),
        m=getattr(args, "m", None),
        k=getattr(args, "k", None),
        gamma=getattr(args, "gamma", None),
        prob_dist=prob_dist,
        seed=args.seed,
    )
    try:
        spec.validate()
    except ValueError as exc:
        parser.error(str(exc))
    g = generate(spec)
    save_graph(g, args.output)
    print(f"wrote {g!r} to {args.output}", file=sys.stderr)
    return 0


def _cmd_centrality(args) -> int:
    g = load_graph(args.graph)
    params = {}
    if args.command.startswith("psp-"):
        if not 0.0 <= args.phi <= 1.0:
            raise ValueError("phi must lie in [0, 1]")
        params = {"phi": args.phi, "workers": args.workers or _default_workers()}
    elif args.command.startswith("mc-"):
        params = {
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers or _default_workers(),
        }
    else:
        params = {"cap": args.cap}
    start = time.perf_counter()
    vec = compute_centrality(g, args.command, **params)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    scores_io.write_scores(args.output, vec)
    print(f"{args.command}: {len(vec.scores)} nodes in {elapsed_ms:.1f} ms", file=sys.stderr)
    return 0


def _cmd_compare(args) -> int:
    a = scores_io.read_scores(args.scores_a)
    b = scores_io.read_scores(args.scores_b)
    if len(a.scores) != len(b.scores):
        raise ValueError(
            f"node-count mismatch: {len(a.scores)} vs {len(b.scores)}"
        )
    report = ExperimentReport(
        measure=a.method.split("-")[-1],
        method_a={"method": a.method, **a.params},
        method_b={"method": b.method, **b.params},
        mae=mae(a, b),
        scc=scc(a, b),
        runtime_a_ms=0.0,
        runtime_b_ms=0.0,
        seed=a.seed,
    )
    if args.format == "json":
        text = report.to_json() + "\n"
    else:
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        writer.writerow(report.csv_row())
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_reproduce(args) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    if args.suite == "figure-examples":
        results = experiments.figure_examples(args.phi)
        path = os.path.join(args.out_dir, "figure_examples.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(results, fh, indent=2)
        for name, vals in results.items():
            print(
                f"{name}: estimated d_er={vals['estimated_d_er']:.6g} "
                f"exact d_er={vals['exact_d_er']:.6g}"
            )
        print(f"wrote {path}", file=sys.stderr)
        return 0
    phi_grid = tuple(float(x) for x in args.phi_grid.split(","))
    settings = experiments.SweepSettings(
        graphs_per_cell=args.graphs_per_cell,
        n=args.n,
        samples=args.samples,
        phi_grid=phi_grid,
        seed=args.seed,
        jobs=args.jobs or _default_workers(),
    )
    reports = experiments.phi_sweep(settings)
    experiments.write_sweep_outputs(args.out_dir, settings, reports)
    print(f"wrote {len(reports)} rows to {os.path.join(args.out_dir, 'sweep.csv')}",
          file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args, parser)
        if args.command in CENTRALITY_METHODS:
            return _cmd_centrality(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "reproduce":
            return _cmd_reproduce(args)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
