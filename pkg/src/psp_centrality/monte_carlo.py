"""Monte Carlo estimators of expected centrality measures.

Worlds are sampled with a counter-based seed derivation (fixed-size sample
blocks keyed by the master seed and block index), so the sampled multiset
depends only on (master_seed, samples). Identical sampled worlds are grouped
and each distinct world is evaluated once; the weighted mean equals the plain
per-sample mean and the whole pipeline is deterministic for any worker count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _parallel
from .deterministic import (
    CentralityVector,
    betweenness_scores_from_adjacency,
    harmonic_scores_from_adjacency,
)
from .graph_model import UncertainGraph

_SAMPLE_BLOCK = 8192  # samples drawn per derived RNG stream
_EVAL_CHUNK = 256  # distinct worlds evaluated per pool task


@dataclass(frozen=True)
class McConfig:
    """Sample count, master seed and worker count for one estimator run."""

    samples: int
    master_seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def _sample_world_codes(g: UncertainGraph, cfg: McConfig):
    """Distinct sampled worlds as packed inclusion-bit rows, with multiplicities."""
    k = g.uncertain_edge_count
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint8), np.array([cfg.samples])
    probs = g.probs[g.uncertain_idx]
    blocks = []
    for block_index, start in enumerate(range(0, cfg.samples, _SAMPLE_BLOCK)):
        count = min(_SAMPLE_BLOCK, cfg.samples - start)
        seed = np.random.SeedSequence(entropy=cfg.master_seed, spawn_key=(block_index,))
        rng = np.random.default_rng(seed)
        incl = rng.random((count, k)) < probs
        blocks.append(np.packbits(incl, axis=1))
    rows = np.concatenate(blocks, axis=0)
    return np.unique(rows, axis=0, return_counts=True)


_STATE: tuple | None = None


def _init_worker(graph, measure):
    global _STATE
    n = graph.node_count
    base = np.zeros((n, n))
    certain = graph.certain_mask
    u = graph.edge_u[certain]
    v = graph.edge_v[certain]
    base[u, v] = 1.0
    base[v, u] = 1.0
    kernel = (
        harmonic_scores_from_adjacency
        if measure == "harmonic"
        else betweenness_scores_from_adjacency
    )
    _STATE = (graph, base, kernel)


def _eval_chunk(rows: np.ndarray) -> np.ndarray:
    g, base, kernel = _STATE
    k = g.uncertain_edge_count
    out = np.empty((len(rows), g.node_count))
    for i, row in enumerate(rows):
        a = base.copy()
        if k:
            incl = np.unpackbits(row)[:k].astype(bool)
            idx = g.uncertain_idx[incl]
            u = g.edge_u[idx]
            v = g.edge_v[idx]
            a[u, v] = 1.0
            a[v, u] = 1.0
        out[i] = kernel(a)
    return out


def _mc_estimate(g: UncertainGraph, cfg: McConfig, measure: str) -> np.ndarray:
    codes, counts = _sample_world_codes(g, cfg)
    chunks = [codes[i : i + _EVAL_CHUNK] for i in range(0, len(codes), _EVAL_CHUNK)]
    values = _parallel.run_ordered(
        _eval_chunk,
        chunks,
        cfg.workers,
        initializer=_init_worker,
        initargs=(g, measure),
    )
    stacked = np.concatenate(values, axis=0)
    return counts.astype(np.float64) @ stacked / cfg.samples


def mc_harmonic(g: UncertainGraph, cfg: McConfig) -> CentralityVector:
    """Mean harmonic closeness over cfg.samples sampled worlds."""
    if g.node_count < 2:
        raise ValueError("harmonic closeness needs at least 2 nodes")
    scores = _mc_estimate(g, cfg, "harmonic")
    return CentralityVector(
        scores, method="mc-harmonic", params={"samples": cfg.samples}, seed=cfg.master_seed
    )


def mc_betweenness(g: UncertainGraph, cfg: McConfig) -> CentralityVector:
    """Mean betweenness over cfg.samples sampled worlds."""
    if g.node_count < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    scores = _mc_estimate(g, cfg, "betweenness")
    return CentralityVector(
        scores, method="mc-betweenness", params={"samples": cfg.samples}, seed=cfg.master_seed
    )
