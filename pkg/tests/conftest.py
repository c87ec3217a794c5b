import numpy as np
import pytest

from psp_centrality import PossibleWorld, UncertainGraph
from psp_centrality.experiments import detour_graph, parallel_paths_graph


@pytest.fixture
def parallel_graph():
    return parallel_paths_graph()


@pytest.fixture
def detour():
    return detour_graph()


@pytest.fixture
def star5():
    return UncertainGraph(5, [(0, i) for i in range(1, 5)], [1.0] * 4)


def star_graph(n):
    return UncertainGraph(n, [(0, i) for i in range(1, n)], [1.0] * (n - 1))


def full_world(g):
    mask = g.probs > 0.0
    return PossibleWorld(g, mask)


def random_uncertain_graph(rng, n=8, edge_prob=0.4, max_uncertain=None):
    """Random topology with random edge probabilities (including some 0/1)."""
    iu, iv = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < edge_prob
    edges = [(int(u), int(v)) for u, v in zip(iu[keep], iv[keep])]
    probs = rng.random(len(edges))
    hard = rng.random(len(edges))
    probs = np.where(hard < 0.1, 1.0, np.where(hard > 0.92, 0.0, probs))
    if max_uncertain is not None:
        uncertain = [i for i, p in enumerate(probs) if 0.0 < p < 1.0]
        for i in uncertain[max_uncertain:]:
            probs[i] = 1.0
    return UncertainGraph(n, edges, probs)


def random_deterministic_graph(rng, n=12, edge_prob=0.3):
    iu, iv = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < edge_prob
    edges = [(int(u), int(v)) for u, v in zip(iu[keep], iv[keep])]
    return UncertainGraph(n, edges, np.ones(len(edges)))
