import logging
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from pinnacles.admissibility import is_admissible_pinnacle_set
from pinnacles.config import max_naive_n
from pinnacles.generation import generate_constructive, generate_naive
from pinnacles.utils import format_value_set

logger = logging.getLogger(__name__)

CSV_HEADER = ("n", "pinnacles", "count", "naive_ms", "construct_ms", "speedup")


def time_call(func, *args, runs=3):
    """
    Time ``func(*args)``.

    Parameters
    ----------
    func: callable
        Function to time.
    *args:
        Positional arguments passed to ``func``.
    runs: int, optional, default=3
        Number of timed runs. One extra untimed warm-up run precedes them.

    Returns
    -------
    tuple
        The result of the last call and the median wall time in milliseconds,
        measured with ``time.perf_counter``.
    """
    if runs < 1:
        raise ValueError(f"runs should be at least 1. Got {runs}.")

    result = func(*args)
    timings = []
    for _ in range(runs):
        start = time.perf_counter()
        result = func(*args)
        timings.append(time.perf_counter() - start)
    return result, 1000 * float(np.median(timings))


def admissible_pinnacle_sets(n):
    """All admissible pinnacle sets for S_n, by size, then lexicographically."""
    candidates = range(3, n + 1)
    return [
        P
        for size in range((n - 1) // 2 + 1)
        for P in combinations(candidates, size)
        if is_admissible_pinnacle_set(P, n, fast=True)
    ]


@dataclass
class BenchRow:
    n: int
    pinnacles: tuple
    count: int
    naive_ms: float = None
    construct_ms: float = None

    @property
    def speedup(self):
        if self.naive_ms is None or not self.construct_ms:
            return None
        return self.naive_ms / self.construct_ms

    def as_dict(self):
        return {
            "n": self.n,
            "pinnacles": list(self.pinnacles),
            "count": self.count,
            "naive_ms": self.naive_ms,
            "construct_ms": self.construct_ms,
            "speedup": self.speedup,
        }

    def as_csv_row(self):
        def fmt(value):
            return "skipped" if value is None else f"{value:.3f}"

        return (
            self.n,
            format_value_set(self.pinnacles, sep=";"),
            self.count,
            fmt(self.naive_ms),
            fmt(self.construct_ms),
            "" if self.speedup is None else f"{self.speedup:.1f}",
        )


def bench_row(P, n, runs=3, limit=None):
    """
    Time both generation algorithms for one pinnacle set.

    The naive leg is skipped when ``n`` exceeds the exhaustive limit.

    Raises
    ------
    RuntimeError
        If the two algorithms return different permutations.
    """
    constructed, construct_ms = time_call(generate_constructive, P, n, runs=runs)
    row = BenchRow(n, tuple(P), len(constructed), construct_ms=construct_ms)

    limit = max_naive_n() if limit is None else limit
    if n > limit:
        logger.info("Skipping the naive leg for n=%d above limit %d.", n, limit)
        return row

    naive, row.naive_ms = time_call(generate_naive, P, n, runs=runs)
    if naive != constructed:
        raise RuntimeError(
            f"Algorithms disagree for P={P}, n={n}: {len(naive)} naive permutations, "
            f"{len(constructed)} constructed."
        )
    logger.info(
        "P=%s: %d permutations, naive %.2f ms, construct %.2f ms.",
        P,
        row.count,
        row.naive_ms,
        row.construct_ms,
    )
    return row


def bench_rows(pinnacle_sets, n, runs=3, limit=None):
    return [bench_row(P, n, runs=runs, limit=limit) for P in pinnacle_sets]
