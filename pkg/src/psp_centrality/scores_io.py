"""Per-node score files.

Self-describing plain text: '#'-prefixed header lines carrying method,
parameters and seed, followed by one "node score" line per node. Scores are
written with shortest round-trip repr, so rereading reproduces the exact
floats and identical runs produce byte-identical files.
"""

from __future__ import annotations

import numpy as np

from .deterministic import CentralityVector


def write_scores(path, vec: CentralityVector) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# method {vec.method}\n")
        params = " ".join(f"{k}={vec.params[k]!r}" for k in sorted(vec.params))
        fh.write(f"# params {params}\n")
        fh.write(f"# seed {'none' if vec.seed is None else vec.seed}\n")
        fh.write(f"# nodes {len(vec.scores)}\n")
        for i, s in enumerate(vec.scores):
            fh.write(f"{i} {float(s)!r}\n")


def read_scores(path) -> CentralityVector:
    method = ""
    params: dict = {}
    seed = None
    entries = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                tokens = line[1:].split()
                if not tokens:
                    continue
                key, rest = tokens[0], tokens[1:]
                if key == "method" and rest:
                    method = rest[0]
                elif key == "seed" and rest:
                    seed = None if rest[0] == "none" else int(rest[0])
                elif key == "params":
                    for item in rest:
                        if "=" in item:
                            k, v = item.split("=", 1)
                            params[k] = v
                continue
            node_str, score_str = line.split()
            entries[int(node_str)] = float(score_str)
    scores = np.array([entries[i] for i in range(len(entries))])
    return CentralityVector(scores, method=method, params=params, seed=seed)
