"""Counting words that avoid a fixed factor.

:class:`AvoidanceAutomaton` is the KMP matching automaton of a pattern: state
``s`` means the longest suffix of the input that is a prefix of the pattern
has length ``s``, and state ``len(pattern)`` (a full match) absorbs.
Counting words that never reach it is a dynamic program over the other
states.

The number of length-``n`` words avoiding a pattern depends only on the
pattern's length and its set of periods (its autocorrelation), so patterns
can be grouped by :func:`autocorrelation` and one automaton run per group.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence


def failure_function(pattern: Sequence[int]) -> list[int]:
    """``fail[i]`` = length of the longest proper border of ``pattern[:i+1]``."""
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


class AvoidanceAutomaton:
    __slots__ = ("pattern", "q", "delta")

    def __init__(self, pattern: Sequence[int], q: int):
        pattern = tuple(pattern)
        if not pattern:
            raise ValueError("pattern must be nonempty")
        if any(not 0 <= c < q for c in pattern):
            raise ValueError("pattern symbol outside the alphabet")
        self.pattern = pattern
        self.q = q
        m = len(pattern)
        fail = failure_function(pattern)
        delta = [[0] * q for _ in range(m + 1)]
        for s in range(m + 1):
            for x in range(q):
                if s == m:
                    delta[s][x] = m
                elif pattern[s] == x:
                    delta[s][x] = s + 1
                elif s == 0:
                    delta[s][x] = 0
                else:
                    delta[s][x] = delta[fail[s - 1]][x]
        self.delta = delta

    @property
    def accept(self) -> int:
        return len(self.pattern)

    @property
    def num_states(self) -> int:
        return len(self.pattern) + 1

    def run(self, word: Sequence[int]) -> int:
        s = 0
        for x in word:
            s = self.delta[s][x]
        return s

    def avoiding_counts(self, n_max: int) -> list[int]:
        """``out[n]`` = number of words of length ``n`` with no occurrence
        of the pattern, for ``n = 0..n_max``."""
        m = self.accept
        counts = [0] * m
        counts[0] = 1
        out = [1]
        for _ in range(n_max):
            nxt = [0] * m
            for s, c in enumerate(counts):
                if c:
                    for t in self.delta[s]:
                        if t != m:
                            nxt[t] += c
            counts = nxt
            out.append(sum(counts))
        return out

    def count_avoiding(self, n: int) -> int:
        return self.avoiding_counts(n)[n]


def autocorrelation(pattern: bytes | Sequence[int]) -> int:
    """Bitmask with bit ``d`` set iff ``d`` is a period of ``pattern`` (``0 < d < len``)."""
    if not isinstance(pattern, bytes):
        pattern = bytes(pattern)
    mask = 0
    for d in range(1, len(pattern)):
        if pattern[d:] == pattern[:-d]:
            mask |= 1 << d
    return mask


@lru_cache(maxsize=None)
def _avoid_by_representative(pattern: tuple[int, ...], q: int, n: int) -> int:
    return AvoidanceAutomaton(pattern, q).count_avoiding(n)


def avoid_count(pattern: Sequence[int], q: int, n: int) -> int:
    return _avoid_by_representative(tuple(pattern), q, n)
