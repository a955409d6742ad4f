"""De Bruijn words.

The generator concatenates, in lexicographic order, the Lyndon words whose
length divides ``k`` (Fredricksen-Kessler-Maiorana).  This yields the
lexicographically least cyclic De Bruijn sequence, which is then
linearised by appending its first ``k - 1`` symbols.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_DEBRUIJN_CAP, check_budget
from .words import Word


@dataclass(frozen=True)
class DeBruijnWord:
    word: Word
    order: int

    @property
    def q(self) -> int:
        return self.word.q

    def __str__(self) -> str:
        return str(self.word)


def lyndon_words(q: int, k: int):
    """Yield Lyndon words of length at most ``k`` in lexicographic order (Duval)."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == q - 1:
            w.pop()


def generate_de_bruijn(q: int, k: int, cap: int = DEFAULT_DEBRUIJN_CAP) -> DeBruijnWord:
    if q < 1 or k < 1:
        raise ValueError("need q >= 1 and k >= 1")
    check_budget(q**k, cap, f"De Bruijn word of order {k} over {q} letters")
    if q == 1:
        return DeBruijnWord(Word((0,) * k, 1), k)
    cyclic: list[int] = []
    for lw in lyndon_words(q, k):
        if k % len(lw) == 0:
            cyclic.extend(lw)
    linear = cyclic + cyclic[:k - 1]
    return DeBruijnWord(Word(tuple(linear), q), k)


def verify_de_bruijn(w: Word, k: int) -> bool:
    """True iff the ``k``-windows of ``w`` are exactly ``A^k``, each once."""
    q = w.q
    if k < 1 or len(w) != q**k + k - 1:
        return False
    s = w.symbols
    seen = set()
    for i in range(q**k):
        u = s[i:i + k]
        if u in seen:
            return False
        seen.add(u)
    return len(seen) == q**k
