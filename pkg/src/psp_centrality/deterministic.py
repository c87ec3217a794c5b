"""Exact shortest-path and centrality algorithms on a single graph instance.

These run on possible worlds (deterministic graphs) and back both the Monte
Carlo estimators and the brute-force oracle. The all-pairs kernels work on a
dense adjacency matrix so the per-world cost is a handful of BLAS calls; this
is intended for desk-scale graphs (up to a few thousand nodes).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .graph_model import PossibleWorld


@dataclass(eq=False)
class DistanceVector:
    """Unweighted shortest-path distances from one source; inf = unreachable."""

    source: int
    dist: np.ndarray


@dataclass(eq=False)
class CentralityVector:
    """Per-node scores plus provenance (method name, parameters, seed)."""

    scores: np.ndarray
    method: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def __len__(self):
        return len(self.scores)


def as_scores(x) -> np.ndarray:
    """Accept a CentralityVector or any array-like and return the raw scores."""
    if isinstance(x, CentralityVector):
        return np.asarray(x.scores, dtype=np.float64)
    return np.asarray(x, dtype=np.float64)


def bfs_distances(w: PossibleWorld, source: int) -> DistanceVector:
    """Breadth-first distances from ``source`` in the world w."""
    n = w.parent.node_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} outside node range")
    adj = w.neighbor_lists()
    dist = np.full(n, np.inf)
    dist[source] = 0.0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        nd = dist[u] + 1.0
        for v in adj[u]:
            if dist[v] == np.inf:
                dist[v] = nd
                queue.append(v)
    return DistanceVector(source=source, dist=dist)


def _level_masks(a: np.ndarray) -> list[np.ndarray]:
    """Boolean masks L[d][s, v] == True iff dist(s, v) == d + 1, for all sources."""
    n = a.shape[0]
    visited = np.eye(n, dtype=bool)
    frontier = visited.astype(np.float64)
    levels = []
    while True:
        reach = frontier @ a
        nxt = reach > 0.0
        nxt &= ~visited
        if not nxt.any():
            return levels
        levels.append(nxt)
        visited |= nxt
        frontier = nxt.astype(np.float64)


def harmonic_scores_from_adjacency(a: np.ndarray) -> np.ndarray:
    """Normalized harmonic closeness of every node for adjacency matrix a."""
    n = a.shape[0]
    acc = np.zeros(n)
    for d, mask in enumerate(_level_masks(a), start=1):
        acc += mask.sum(axis=0) / d
    return acc / (n - 1)


def betweenness_scores_from_adjacency(a: np.ndarray) -> np.ndarray:
    """Normalized betweenness of every node via the dependency recursion.

    Forward sweep counts shortest paths level-synchronously for all sources at
    once; the backward sweep accumulates dependencies. Each unordered pair is
    seen from both endpoints, hence the single 1/((n-1)(n-2)) normalization.
    """
    n = a.shape[0]
    visited = np.eye(n, dtype=bool)
    sigma = np.eye(n)
    sigma_front = np.eye(n)  # sigma restricted to the current frontier
    levels = []
    sigma_levels = []
    while True:
        flow = sigma_front @ a
        nxt = flow > 0.0
        nxt &= ~visited
        if not nxt.any():
            break
        sigma_front = flow * nxt
        sigma += sigma_front
        visited |= nxt
        levels.append(nxt)
        sigma_levels.append(sigma_front)

    delta = np.zeros((n, n))
    for i in range(len(levels) - 1, 0, -1):
        cur = levels[i]
        coef = np.divide(1.0 + delta, sigma, out=np.zeros((n, n)), where=cur)
        spread = coef @ a
        spread *= levels[i - 1]
        spread *= sigma_levels[i - 1]
        delta += spread
    return delta.sum(axis=0) / ((n - 1) * (n - 2))


def harmonic_closeness(w: PossibleWorld) -> CentralityVector:
    """Normalized harmonic closeness; 1/inf counts as 0 for unreachable pairs."""
    if w.parent.node_count < 2:
        raise ValueError("harmonic closeness needs at least 2 nodes")
    scores = harmonic_scores_from_adjacency(w.adjacency_matrix())
    return CentralityVector(scores, method="harmonic", params={})


def betweenness_brandes(w: PossibleWorld) -> CentralityVector:
    """Normalized betweenness centrality (dependency-accumulation algorithm)."""
    if w.parent.node_count < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    scores = betweenness_scores_from_adjacency(w.adjacency_matrix())
    return CentralityVector(scores, method="betweenness", params={})


def _bfs_preds(adj, source):
    n = len(adj)
    dist = [-1] * n
    dist[source] = 0
    preds = [[] for _ in range(n)]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                preds[v].append(u)
                queue.append(v)
            elif dist[v] == du + 1:
                preds[v].append(u)
    return dist, preds


def _all_shortest_paths(preds, source, target):
    """Every shortest source-target path as a node tuple (target..source)."""
    out = []
    stack = [(target, (target,))]
    while stack:
        node, path = stack.pop()
        if node == source:
            out.append(path)
            continue
        for p in preds[node]:
            stack.append((p, path + (p,)))
    return out


def betweenness_naive(w: PossibleWorld) -> CentralityVector:
    """Reference betweenness by explicit enumeration of all shortest paths.

    Exponential in the worst case; meant as an independent oracle on small
    graphs, not for production use.
    """
    n = w.parent.node_count
    if n < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    adj = w.neighbor_lists()
    totals = np.zeros(n)
    for s in range(n - 1):
        dist, preds = _bfs_preds(adj, s)
        for t in range(s + 1, n):
            if dist[t] < 0:
                continue  # sigma(s, t) = 0 contributes nothing
            paths = _all_shortest_paths(preds, s, t)
            share = 1.0 / len(paths)
            for path in paths:
                for v in path[1:-1]:
                    totals[v] += share
    scores = totals * (2.0 / ((n - 1) * (n - 2)))
    return CentralityVector(scores, method="betweenness-naive", params={})
