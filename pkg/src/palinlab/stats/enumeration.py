"""Exhaustive sum of ``P(w)`` over all words, vectorised with numpy.

Words are grown one letter at a time, every word of the current length at
once.  Appending a letter creates at most one new distinct palindrome: the
longest palindromic suffix, and only if it does not occur earlier.  For
each word we therefore carry

* its value ``W`` with symbol ``t`` stored as digit ``t`` (first symbol
  least significant),
* ``mask``, with bit ``L`` set iff the suffix of length ``L`` is a
  palindrome,
* ``P``, its number of distinct nonempty palindromic factors.

A suffix of length ``L + 2`` of ``w x`` is a palindrome iff the suffix of
length ``L`` of ``w`` is one and the letter just before it equals ``x``.

Large levels are split by prefix into independent pieces; the per-length
totals are plain integer sums, so the split (and the thread count) cannot
change the result.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..config import check_budget, enumeration_cap

DEFAULT_CHUNK = 2**18


class _Level:
    __slots__ = ("W", "mask", "P")

    def __init__(self, W, mask, P):
        self.W = W
        self.mask = mask
        self.P = P

    def __len__(self):
        return len(self.W)

    def pieces(self, size: int):
        for i in range(0, len(self.W), size):
            yield _Level(self.W[i:i + size], self.mask[i:i + size], self.P[i:i + size])


def _extend(level: _Level, m: int, q: int, pw: np.ndarray) -> _Level:
    """All one-letter extensions of the words of length ``m``."""
    size = len(level)
    W = np.tile(level.W, q)
    X = np.repeat(np.arange(q, dtype=np.int64), size)
    W = W + X * pw[m]
    old_mask = np.tile(level.mask, q)

    mask = np.full(W.shape, 3, dtype=np.int64)
    for L in range(m):
        digit = (W // pw[m - 1 - L]) % q
        hit = ((old_mask >> L) & 1).astype(bool) & (digit == X)
        mask |= hit.astype(np.int64) << (L + 2)

    longest = np.frexp(mask.astype(np.float64))[1].astype(np.int64) - 1
    start = (m + 1) - longest
    suffix = W // pw[start]
    width = pw[longest]
    seen = np.zeros(W.shape, dtype=bool)
    for j in range(m):
        window = (W // pw[j]) % width
        seen |= (j < start) & (window == suffix)

    P = np.tile(level.P, q) + (~seen).astype(np.int64)
    return _Level(W, mask, P)


def _grow(level: _Level, m: int, n_max: int, q: int, pw: np.ndarray, chunk: int,
          totals: list[int]) -> None:
    while m < n_max:
        if len(level) * q > chunk and len(level) > 1:
            step = max(1, chunk // q)
            for piece in level.pieces(step):
                _grow(piece, m, n_max, q, pw, chunk, totals)
            return
        level = _extend(level, m, q, pw)
        m += 1
        totals[m] += int(level.P.sum())


def enumeration_totals(q: int, n_max: int, cap: int | None = None,
                       chunk: int = DEFAULT_CHUNK, threads: int = 1) -> list[int]:
    """``totals[n]`` = sum of ``P(w)`` over all ``q^n`` words, for ``n = 0..n_max``."""
    if q < 1 or n_max < 0:
        raise ValueError("need q >= 1 and n >= 0")
    if cap is None:
        cap = enumeration_cap()
    check_budget(q**n_max, cap, f"enumeration of {q}^{n_max} words",
                 "raise PALINLAB_BUDGET or use the automaton method")
    if q ** (n_max + 1) >= 2**62 or n_max > 50:
        raise ValueError("word values must fit in 64-bit integers")
    pw = np.array([q**i for i in range(n_max + 2)], dtype=np.int64)
    totals = [0] * (n_max + 1)
    level = _Level(np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64),
                   np.zeros(1, dtype=np.int64))
    m = 0
    # grow breadth-first until there is enough to hand out
    while m < n_max and len(level) * q <= chunk:
        level = _extend(level, m, q, pw)
        m += 1
        totals[m] += int(level.P.sum())
    if m == n_max:
        return totals

    step = max(1, len(level) // max(threads, 1))
    pieces = list(level.pieces(step))

    def work(piece):
        local = [0] * (n_max + 1)
        _grow(piece, m, n_max, q, pw, chunk, local)
        return local

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, pieces))
    else:
        parts = [work(piece) for piece in pieces]
    for part in parts:
        for i, v in enumerate(part):
            totals[i] += v
    return totals
