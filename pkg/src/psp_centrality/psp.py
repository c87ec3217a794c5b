"""Possible-shortest-path heuristics.

A possible shortest path between s and t is any path that is a shortest s-t
path in at least one instance of the uncertain graph. The heuristics explore
them in rounds: treat the graph as deterministic, collect all shortest s-t
paths, then delete one minimal-probability edge per path and repeat, until
the estimated connection probability reaches the threshold ``phi`` or the
pair disconnects. The explored paths drive

* an estimated s-t distance distribution (with a capping rule that keeps the
  total mass at 1),
* harmonic closeness based on the expected distance conditioned on
  connection, and
* betweenness based on estimated relative path probabilities.

Everything here is deterministic: given the same graph (including edge input
order, which fixes adjacency order) and phi, results are identical for any
worker count.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _parallel
from .deterministic import CentralityVector
from .graph_model import UncertainGraph
from .possible_worlds import DistanceDistribution


class MinEdgeTag(NamedTuple):
    """Minimal-probability edge remembered per node during the forward sweep.

    ``prob`` is inf and ``edge`` None on the source (nothing traversed yet).
    ``depth`` is the BFS depth of the edge's deeper endpoint.
    """

    edge: tuple[int, int] | None
    prob: float
    depth: int


_NO_TAG = MinEdgeTag(None, math.inf, 0)


class PathRecord(NamedTuple):
    """One explored shortest path: hop length, product of its edge
    probabilities, and (betweenness only) the nodes strictly between the
    endpoints."""

    length: int
    abs_prob: float
    inner_nodes: tuple[int, ...] | None


@dataclass(eq=False)
class ExplorationRound:
    """Result of one all-shortest-paths sweep for a pair.

    ``path_probs`` holds plain floats for the harmonic variant and
    PathRecords for the betweenness variant; all paths share ``length``.
    ``min_edges`` are the edges to delete before the next round.
    """

    length: int | float
    path_probs: list
    min_edges: list[tuple[int, int]]


def _forward_bfs(g: UncertainGraph, s: int, t: int, deleted):
    """Level BFS from s over non-deleted edges, recording predecessors and
    minimal-edge tags.

    Tag update rule: a newly traversed edge takes over when its probability
    is <= the inherited minimum (so equal probabilities prefer the deeper,
    later-found edge); otherwise the lower-probability inherited tag wins,
    and on equal probabilities the deeper tag wins.

    Stops when the first node at t's level is dequeued; everything at levels
    below t is complete by then. Returns (dist, preds, tags) where dist is -1
    for unreached nodes and preds[v] lists (parent, edge probability) pairs.
    """
    n = g.node_count
    dist = [-1] * n
    dist[s] = 0
    preds: list = [None] * n
    tags = [_NO_TAG] * n
    adj = g.adj
    queue = deque([s])
    t_dist = -1
    while queue:
        curr = queue.popleft()
        d_curr = dist[curr]
        if t_dist >= 0 and d_curr >= t_dist:
            break
        ctag = tags[curr]
        for child, p, ekey in adj[curr]:
            if ekey in deleted:
                continue
            d_child = dist[child]
            if d_child < 0:
                d_new = d_curr + 1
                dist[child] = d_new
                preds[child] = [(curr, p)]
                queue.append(child)
                if ctag.prob >= p:
                    tags[child] = MinEdgeTag(ekey, p, d_new)
                else:
                    tags[child] = ctag
                if child == t:
                    t_dist = d_new
            elif d_child == d_curr + 1:
                preds[child].append((curr, p))
                chtag = tags[child]
                if min(chtag.prob, ctag.prob) >= p:
                    tags[child] = MinEdgeTag(ekey, p, d_child)
                elif chtag.prob > ctag.prob:
                    tags[child] = ctag
                elif ctag.prob == chtag.prob and ctag.depth > chtag.depth:
                    tags[child] = ctag
    return dist, preds, tags


def retrieve_min_edges(g: UncertainGraph, t: int, dist, tags, deleted=frozenset()):
    """Backward sweep from t collecting one minimal edge per shortest path.

    Walks only edges that step one level closer to the source. An edge
    incident to t is taken when its probability is <= the minimum recorded
    below it; deeper down, an edge is taken exactly when it is the stored
    tag of its upper endpoint. The walk stops below every emitted edge, so
    each shortest path loses at least one edge and every emitted edge lies
    on some shortest path.
    """
    visited = [False] * g.node_count
    visited[t] = True
    out = []
    queue = deque()
    d_t = dist[t]
    for child, p, ekey in g.adj[t]:
        if ekey in deleted:
            continue
        if dist[child] == d_t - 1:
            visited[child] = True
            if p <= tags[child].prob:
                out.append(ekey)
            else:
                queue.append(child)
    while queue:
        curr = queue.popleft()
        tag_edge = tags[curr].edge
        d_down = dist[curr] - 1
        for child, p, ekey in g.adj[curr]:
            if ekey in deleted:
                continue
            if dist[child] == d_down:
                if tag_edge == ekey:
                    out.append(ekey)
                elif not visited[child]:
                    visited[child] = True
                    queue.append(child)
    return out


def _path_probs(preds, s: int, t: int) -> list[float]:
    """Existence probabilities of all shortest s-t paths in the predecessor DAG."""
    out = []
    stack = [(t, 1.0)]
    while stack:
        node, prob = stack.pop()
        for parent, p in preds[node]:
            q = prob * p
            if parent == s:
                out.append(q)
            else:
                stack.append((parent, q))
    return out


def _paths_with_inner(preds, s: int, t: int):
    """(probability, inner nodes) of all shortest s-t paths."""
    out = []
    stack = [(t, 1.0, ())]
    while stack:
        node, prob, inner = stack.pop()
        for parent, p in preds[node]:
            q = prob * p
            if parent == s:
                out.append((q, inner))
            else:
                stack.append((parent, q, (parent,) + inner))
    return out


def all_shortest_paths_round(
    g: UncertainGraph,
    s: int,
    t: int,
    deleted=frozenset(),
    variant: str = "harmonic",
) -> ExplorationRound:
    """One exploration round: all shortest s-t paths avoiding deleted edges.

    Returns length inf with empty lists when t is unreachable.
    """
    if s == t:
        raise ValueError("s and t must be distinct")
    if variant not in ("harmonic", "betweenness"):
        raise ValueError(f"unknown variant {variant!r}")
    dist, preds, tags = _forward_bfs(g, s, t, deleted)
    if dist[t] < 0:
        return ExplorationRound(length=math.inf, path_probs=[], min_edges=[])
    min_edges = retrieve_min_edges(g, t, dist, tags, deleted)
    length = dist[t]
    if variant == "harmonic":
        records = _path_probs(preds, s, t)
    else:
        records = [
            PathRecord(length, prob, inner)
            for prob, inner in _paths_with_inner(preds, s, t)
        ]
    return ExplorationRound(length=length, path_probs=records, min_edges=min_edges)


def _iter_round_masses(g: UncertainGraph, s: int, t: int, phi: float):
    """Yield (length, probability mass) per exploration round.

    Per round the new mass is the product of (1 - Pr) over all previously
    found paths times the sum of the round's path probabilities. When the
    accumulated mass would reach 1 the current length absorbs the remainder
    and exploration stops (capping rule); the caller treats 1 minus the
    yielded total as the disconnection mass.
    """
    deleted = set()
    remaining = 1.0  # product of (1 - Pr(path)) over every found path
    total = 0.0
    phi_st = 0.0
    while phi_st < phi:
        dist, preds, tags = _forward_bfs(g, s, t, deleted)
        if dist[t] < 0:
            return
        probs = _path_probs(preds, s, t)
        new_mass = remaining * sum(probs)
        if total + new_mass >= 1.0:
            yield dist[t], 1.0 - total
            return
        yield dist[t], new_mass
        total += new_mass
        for p in probs:
            remaining *= 1.0 - p
        phi_st = 1.0 - remaining
        deleted.update(retrieve_min_edges(g, t, dist, tags, deleted))


def psp_distance_distribution(
    g: UncertainGraph, s: int, t: int, phi: float
) -> DistanceDistribution:
    """Estimated s-t distance distribution from explored shortest paths."""
    if s == t:
        raise ValueError("s and t must be distinct")
    if not 0.0 <= phi <= 1.0:
        raise ValueError("phi must lie in [0, 1]")
    mass = np.zeros(g.node_count)
    total = 0.0
    for k, m in _iter_round_masses(g, s, t, phi):
        mass[k] = m
        total += m
    return DistanceDistribution(s=s, t=t, mass=mass, mass_inf=1.0 - total)


def psp_distance_er(g: UncertainGraph, s: int, t: int, phi: float) -> float:
    """Estimated expected-reliable distance; inf when no path mass was found."""
    if s == t:
        raise ValueError("s and t must be distinct")
    gamma, delta = _pair_gamma_delta(g, s, t, phi)
    if gamma <= 0.0:
        return math.inf
    return delta / gamma


def _pair_gamma_delta(g, s, t, phi):
    """Finite mass (gamma) and its distance-weighted sum (delta) for a pair.

    The reciprocal estimated distance is gamma / delta, with 0 for gamma = 0;
    this avoids materializing the full distribution in the all-nodes loops.
    """
    gamma = 0.0
    delta = 0.0
    for k, m in _iter_round_masses(g, s, t, phi):
        gamma += m
        delta += k * m
    return gamma, delta


# Worker-process state for the all-nodes drivers (set by the initializer).
_STATE: tuple | None = None


def _init_worker(graph, phi):
    global _STATE
    _STATE = (graph, phi)


def _harmonic_source_task(s: int) -> np.ndarray:
    g, phi = _STATE
    n = g.node_count
    partial = np.zeros(n)
    for t in range(s + 1, n):
        gamma, delta = _pair_gamma_delta(g, s, t, phi)
        if gamma > 0.0:
            recip = gamma / delta
            partial[s] += recip
            partial[t] += recip
    return partial


def psp_harmonic_all(g: UncertainGraph, phi: float, workers: int = 1) -> CentralityVector:
    """Estimated harmonic closeness of every node.

    Each unordered pair is explored once; per-source partial sums are merged
    in source order so the output is identical for any worker count.
    """
    if g.node_count < 2:
        raise ValueError("harmonic closeness needs at least 2 nodes")
    if not 0.0 <= phi <= 1.0:
        raise ValueError("phi must lie in [0, 1]")
    partials = _parallel.run_ordered(
        _harmonic_source_task,
        range(g.node_count - 1),
        workers,
        initializer=_init_worker,
        initargs=(g, phi),
    )
    scores = np.zeros(g.node_count)
    for part in partials:
        scores += part
    scores /= g.node_count - 1
    return CentralityVector(scores, method="psp-harmonic", params={"phi": phi})


def _betweenness_source_task(s: int) -> np.ndarray:
    g, phi = _STATE
    n = g.node_count
    partial = np.zeros(n)
    buf = np.zeros(n)
    for t in range(s + 1, n):
        touched = []
        sigma = 0.0
        remaining = 1.0
        phi_st = 0.0
        deleted = set()
        while phi_st < phi:
            dist, preds, tags = _forward_bfs(g, s, t, deleted)
            if dist[t] < 0:
                break
            paths = _paths_with_inner(preds, s, t)
            after = remaining
            for prob, inner in paths:
                rel = prob * remaining
                sigma += rel
                after *= 1.0 - prob
                for v in inner:
                    if buf[v] == 0.0:
                        touched.append(v)
                    buf[v] += rel
            remaining = after
            phi_st = 1.0 - remaining
            deleted.update(retrieve_min_edges(g, t, dist, tags, deleted))
        if sigma > 0.0:
            for v in touched:
                partial[v] += buf[v] / sigma * phi_st
        for v in touched:
            buf[v] = 0.0
    return partial


def psp_betweenness_all(g: UncertainGraph, phi: float, workers: int = 1) -> CentralityVector:
    """Estimated betweenness of every node.

    Per pair, each explored path contributes its estimated relative
    probability to the nodes it crosses; the pair's share is scaled by the
    final estimated connection probability. Deterministic for any worker
    count (fixed-order merge of per-source partials).
    """
    if g.node_count < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    if not 0.0 <= phi <= 1.0:
        raise ValueError("phi must lie in [0, 1]")
    partials = _parallel.run_ordered(
        _betweenness_source_task,
        range(g.node_count - 1),
        workers,
        initializer=_init_worker,
        initargs=(g, phi),
    )
    n = g.node_count
    scores = np.zeros(n)
    for part in partials:
        scores += part
    scores *= 2.0 / ((n - 1) * (n - 2))
    return CentralityVector(scores, method="psp-betweenness", params={"phi": phi})
