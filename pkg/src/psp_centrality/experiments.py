"""Reproducible experiment harnesses.

Two suites: the small worked examples on four-node graphs that exercise the
estimated-distribution capping rule, and a seeded sweep over random graphs
comparing the PSP heuristics against Monte Carlo ground truth across an
exploration-threshold grid.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

import numpy as np

from . import _parallel
from .evaluation import CSV_COLUMNS, ExperimentReport, run_experiment
from .generators import GenSpec, generate
from .graph_model import UncertainGraph
from .possible_worlds import distance_er, exact_distance_distribution
from .psp import psp_distance_distribution, psp_distance_er


def parallel_paths_graph() -> UncertainGraph:
    """Two certain spokes from s, two p=0.9 edges into t; both length-2 paths
    together carry estimated mass 1.8, which the capping rule clips to 1."""
    edges = [(0, 1), (0, 2), (1, 3), (2, 3)]
    return UncertainGraph(4, edges, [1.0, 1.0, 0.9, 0.9])


def detour_graph() -> UncertainGraph:
    """Two length-2 s-t paths plus a length-3 detour over the cross edge.

    Node 0 = s, 3 = t. Round one finds path probabilities 0.6 and 0.35 and
    deletes the two minimal edges; the length-3 detour then trips the cap.
    """
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    return UncertainGraph(4, edges, [1.0, 0.5, 0.5, 0.6, 0.7])


def figure_examples(phi: float = 0.8) -> dict:
    """Estimated and exact distance numbers for the two worked-example graphs."""
    out = {}
    for name, g in (("parallel_paths", parallel_paths_graph()), ("detour", detour_graph())):
        s, t = 0, 3
        est = psp_distance_distribution(g, s, t, phi)
        exact = exact_distance_distribution(g, s, t)
        out[name] = {
            "phi": phi,
            "estimated_mass": {str(k): float(est.mass[k]) for k in range(1, 4) if est.mass[k]},
            "estimated_mass_inf": float(est.mass_inf),
            "estimated_d_er": psp_distance_er(g, s, t, phi),
            "exact_mass": {str(k): float(exact.mass[k]) for k in range(1, 4) if exact.mass[k]},
            "exact_mass_inf": float(exact.mass_inf),
            "exact_d_er": distance_er(exact),
        }
    return out


MODELS = ("er", "ba", "rh")
DISTS = ("uniform01", "beta44")


@dataclass(frozen=True)
class SweepSettings:
    """Scaled-down sweep configuration (defaults fit a desk run)."""

    models: tuple = MODELS
    dists: tuple = DISTS
    graphs_per_cell: int = 3
    n: int = 100
    samples: int = 10000
    phi_grid: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
    seed: int = 2023
    jobs: int = 1


def _model_spec(model: str, dist: str, n: int, seed: int) -> GenSpec:
    if model == "er":
        return GenSpec(model="er", n=n, p=0.05, prob_dist=dist, seed=seed)
    if model == "ba":
        return GenSpec(model="ba", n=n, m=5, prob_dist=dist, seed=seed)
    if model == "rh":
        return GenSpec(model="rh", n=n, k=6.0, gamma=3.0, prob_dist=dist, seed=seed)
    raise ValueError(f"unknown model {model!r}")


def _cell_seeds(base_seed: int, model_i: int, dist_i: int, graph_i: int) -> tuple[int, int]:
    seq = np.random.SeedSequence(entropy=base_seed, spawn_key=(model_i, dist_i, graph_i))
    graph_seed, mc_seed = (int(x) for x in seq.generate_state(2))
    return graph_seed, mc_seed


_SETTINGS: SweepSettings | None = None


def _init_sweep(settings: SweepSettings):
    global _SETTINGS
    _SETTINGS = settings


def _sweep_cell(task) -> list[ExperimentReport]:
    model_i, dist_i, graph_i = task
    cfg = _SETTINGS
    model = cfg.models[model_i]
    dist = cfg.dists[dist_i]
    graph_seed, mc_seed = _cell_seeds(cfg.seed, model_i, dist_i, graph_i)
    g = generate(_model_spec(model, dist, cfg.n, graph_seed))
    graph_id = f"{model}-{dist}-{graph_i:02d}"
    reports = []
    for measure in ("betweenness", "harmonic"):
        baseline = {"method": f"mc-{measure}", "samples": cfg.samples, "seed": mc_seed}
        for phi in cfg.phi_grid:
            heuristic = {"method": f"psp-{measure}", "phi": phi}
            reports.append(
                run_experiment(
                    g,
                    measure,
                    heuristic,
                    baseline,
                    graph_id=graph_id,
                    model=model,
                    prob_dist=dist,
                    seed=mc_seed,
                )
            )
    return reports


def phi_sweep(settings: SweepSettings) -> list[ExperimentReport]:
    """Run the sweep; one report per (graph, measure, phi), in fixed order."""
    tasks = [
        (mi, di, gi)
        for mi in range(len(settings.models))
        for di in range(len(settings.dists))
        for gi in range(settings.graphs_per_cell)
    ]
    results = _parallel.run_ordered(
        _sweep_cell, tasks, settings.jobs, initializer=_init_sweep, initargs=(settings,)
    )
    return [report for cell in results for report in cell]


def write_reports_csv(path, reports) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow(r.csv_row())


def write_sweep_outputs(out_dir, settings: SweepSettings, reports) -> None:
    os.makedirs(out_dir, exist_ok=True)
    write_reports_csv(os.path.join(out_dir, "sweep.csv"), reports)
    summary: dict = {}
    for r in reports:
        key = f"{r.model}/{r.prob_dist}/{r.measure}/phi={r.method_a['phi']}"
        summary.setdefault(key, []).append((r.mae, r.scc))
    rendered = {
        key: {
            "mean_mae": float(np.mean([m for m, _ in vals])),
            "mean_scc": float(np.mean([s for _, s in vals])),
            "graphs": len(vals),
        }
        for key, vals in sorted(summary.items())
    }
    with open(os.path.join(out_dir, "summary.json"), "w", encoding="utf-8") as fh:
        json.dump({"settings": settings.__dict__ | {"models": list(settings.models),
                                                     "dists": list(settings.dists),
                                                     "phi_grid": list(settings.phi_grid)},
                   "cells": rendered}, fh, indent=2, default=str)
