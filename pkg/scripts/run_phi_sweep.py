#!/usr/bin/env python3
"""Run the random-graph sweep: PSP heuristics vs Monte Carlo over a phi grid.

Writes sweep.csv (one row per graph/measure/phi) and summary.json (per-cell
mean MAE/SCC) into --out-dir. Defaults are sized for a desk run; scale
--graphs-per-cell / --n / --samples up for tighter statistics.
"""

import argparse
import os

from psp_centrality.experiments import SweepSettings, phi_sweep, write_sweep_outputs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--graphs-per-cell", type=int, default=3)
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument(
        "--phi-grid", type=str, default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0"
    )
    parser.add_argument("--seed", type=int, default=2023)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()

    settings = SweepSettings(
        graphs_per_cell=args.graphs_per_cell,
        n=args.n,
        samples=args.samples,
        phi_grid=tuple(float(x) for x in args.phi_grid.split(",")),
        seed=args.seed,
        jobs=args.jobs,
    )
    reports = phi_sweep(settings)
    write_sweep_outputs(args.out_dir, settings, reports)
    print(f"wrote {len(reports)} rows under {args.out_dir}")


if __name__ == "__main__":
    main()
