"""Sampled estimate of ``M_q(n) / n``.

Word ``i`` of a run is drawn from its own SplitMix64 substream, seeded by
output ``i`` of ``SplitMix64(seed)``.  Samples therefore do not depend on
how they are distributed over workers.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ..eertree import palindrome_count
from ..rng import SplitMix64, substream_seed
from .averages import elapsed_ms
from .closed_forms import theorem_bound
from .report import StatsReport


def sample_word(q: int, n: int, seed: int, index: int) -> tuple[int, ...]:
    return SplitMix64(substream_seed(seed, index)).word(n, q)


def _sample_count(q: int, n: int, seed: int, index: int) -> int:
    return palindrome_count(sample_word(q, n, seed, index), q)


def monte_carlo_counts(q: int, n: int, samples: int, seed: int, threads: int = 1) -> list[int]:
    if samples < 1:
        raise ValueError("need at least one sample")
    if n < 1:
        raise ValueError("n must be >= 1")
    indices = range(samples)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda i: _sample_count(q, n, seed, i), indices))
    return [_sample_count(q, n, seed, i) for i in indices]


def monte_carlo_average(q: int, n: int, samples: int, seed: int, threads: int = 1) -> StatsReport:
    start = time.perf_counter()
    counts = monte_carlo_counts(q, n, samples, seed, threads=threads)
    return StatsReport(
        q=q, n=n, method="monte-carlo",
        total=sum(counts), denominator=samples,
        bound=theorem_bound(q, n) if q >= 2 else None,
        seed=seed, samples=samples,
        elapsed_ms=elapsed_ms(start),
    )


def monte_carlo_estimate(q: int, n: int, samples: int, seed: int, threads: int = 1) -> Fraction:
    return monte_carlo_average(q, n, samples, seed, threads=threads).m_star
