"""SplitMix64, a 64-bit generator that is easy to reproduce in any language.

State advances by the golden-ratio increment; each output is the state run
through a fixed mixing function.  Because output ``i`` depends only on
``seed + (i + 1) * GOLDEN``, any output can be computed directly, which is
how :func:`substream_seed` hands independent streams to workers.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, q: int) -> int:
        """Uniform integer in ``[0, q)``; draws at or above the largest
        multiple of ``q`` are rejected so no residue is favoured."""
        if q < 1:
            raise ValueError("q must be >= 1")
        limit = (1 << 64) - (1 << 64) % q
        while True:
            x = self.next_u64()
            if x < limit:
                return x % q

    def word(self, n: int, q: int) -> tuple[int, ...]:
        return tuple(self.below(q) for _ in range(n))


def substream_seed(seed: int, index: int) -> int:
    """Seed of substream ``index``: the ``index``-th output of ``SplitMix64(seed)``."""
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)
