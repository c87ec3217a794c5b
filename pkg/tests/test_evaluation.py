import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psp_centrality import mae, run_experiment, scc
from psp_centrality.evaluation import aggregate_reports, compute_centrality

vectors = st.lists(
    st.floats(min_value=-100, max_value=100, allow_nan=False), min_size=2, max_size=12
)


def test_mae_examples():
    assert mae([1.0, 2.0], [1.0, 2.0]) == 0.0
    assert mae([0.0, 1.0], [1.0, 0.0]) == 1.0
    assert mae([0.2, 0.4, 0.9], [0.1, 0.5, 0.6]) == pytest.approx(0.5 / 3, abs=1e-15)


def test_mae_validation():
    with pytest.raises(ValueError):
        mae([1.0, 2.0], [1.0])
    with pytest.raises(ValueError):
        mae([], [])


def test_scc_examples():
    assert scc([1, 2, 3, 4], [1, 2, 3, 4]) == pytest.approx(1.0, abs=1e-12)
    assert scc([1, 2, 3, 4], [4, 3, 2, 1]) == pytest.approx(-1.0, abs=1e-12)
    assert scc([1, 2, 3, 4], [1, 2, 4, 3]) == pytest.approx(0.8, abs=1e-12)


def test_scc_with_ties_uses_average_ranks():
    assert scc([1.0, 1.0, 2.0], [1.0, 1.0, 2.0]) == pytest.approx(1.0, abs=1e-12)
    # one tied pair against a strict ordering cannot reach +-1
    assert abs(scc([1.0, 1.0, 2.0], [1.0, 2.0, 3.0])) < 1.0


def test_scc_validation():
    with pytest.raises(ValueError):
        scc([1.0], [2.0])
    with pytest.raises(ValueError):
        scc([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(ValueError, match="constant"):
        scc([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


@settings(max_examples=60)
@given(vectors, vectors)
def test_mae_symmetry(a, b):
    if len(a) != len(b):
        a = a[: min(len(a), len(b))]
        b = b[: len(a)]
    if len(a) < 1:
        return
    assert mae(a, b) == pytest.approx(mae(b, a), rel=1e-12)


@settings(max_examples=60)
@given(st.lists(st.floats(-50, 50, allow_nan=False), min_size=3, max_size=8))
def test_mae_triangle_inequality(a):
    rng = np.random.default_rng(0)
    b = rng.normal(size=len(a))
    c = rng.normal(size=len(a))
    assert mae(a, c) <= mae(a, b) + mae(b, c) + 1e-12


def test_scc_invariant_under_monotone_transform():
    rng = np.random.default_rng(33)
    a = rng.permutation(20).astype(float)
    b = rng.permutation(20).astype(float)
    base = scc(a, b)
    assert scc(np.exp(a / 10), b) == pytest.approx(base, abs=1e-12)
    assert scc(a, 3.0 * b + 7.0) == pytest.approx(base, abs=1e-12)


def test_run_experiment_identical_methods(detour):
    report = run_experiment(
        detour,
        "harmonic",
        {"method": "psp-harmonic", "phi": 0.8},
        {"method": "psp-harmonic", "phi": 0.8},
        graph_id="detour",
    )
    assert report.mae == 0.0
    assert report.scc == pytest.approx(1.0, abs=1e-12)
    assert report.runtime_a_ms >= 0.0 and report.runtime_b_ms >= 0.0


def test_run_experiment_psp_vs_oracle(detour):
    report = run_experiment(
        detour,
        "harmonic",
        {"method": "psp-harmonic", "phi": 0.8},
        {"method": "exact-harmonic"},
        graph_id="detour",
        model="fixture",
        prob_dist="fixed",
    )
    assert np.isfinite(report.mae)
    assert report.method_a["method"] == "psp-harmonic"
    assert report.method_b["method"] == "exact-harmonic"
    row = report.csv_row()
    assert row[0] == "detour" and row[4] == "psp-harmonic" and row[5] == 0.8


def test_aggregate_reports(detour):
    reports = [
        run_experiment(
            detour,
            "harmonic",
            {"method": "psp-harmonic", "phi": 0.8},
            {"method": "mc-harmonic", "samples": 500, "seed": s},
        )
        for s in range(3)
    ]
    agg = aggregate_reports(reports)
    assert agg["count"] == 3
    assert np.isfinite(agg["mean_mae"]) and np.isfinite(agg["mean_scc"])


def test_compute_centrality_rejects_unknown(detour):
    with pytest.raises(ValueError):
        compute_centrality(detour, "pagerank")
