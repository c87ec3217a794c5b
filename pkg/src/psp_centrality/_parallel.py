"""Deterministic process-pool helper.

Results are returned in task-submission order regardless of worker count or
scheduling, so floating-point reductions done by the caller are bitwise
reproducible. Worker state is set up once per process by the initializer.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor


def run_ordered(fn, tasks, workers, initializer=None, initargs=()):
    """Map fn over tasks, returning the results in task order.

    With ``workers <= 1`` everything runs in-process (the initializer is
    still called so fn sees the same module globals either way).
    """
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [fn(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(
        max_workers=workers,
        mp_context=ctx,
        initializer=initializer,
        initargs=initargs,
    ) as pool:
        futures = [pool.submit(fn, t) for t in tasks]
        return [f.result() for f in futures]
