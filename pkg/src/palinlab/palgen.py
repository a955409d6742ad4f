"""Three generators for the palindromes of a fixed length.

* :func:`palindromes_from_de_bruijn` reads every half-word off a De Bruijn
  word and mirrors it.
* :func:`diff_representation` / :func:`palindromes_from_diffs` build the
  gap sequence between consecutive palindromes recursively and recover the
  palindromes by prefix sums.
* :func:`enumerate_palindromes` mirrors every half-word in ascending order.

All lists are ordered by radix-``q`` value of the palindrome.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .config import DEFAULT_DEBRUIJN_CAP, check_budget
from .debruijn import generate_de_bruijn
from .words import Alphabet, Word, integer_to_word, is_palindrome, word_to_integer


def half_length(n: int) -> int:
    return (n + 1) // 2


def palindrome_count(n: int, q: int) -> int:
    return q ** half_length(n)


@dataclass(frozen=True)
class DiffRepresentation:
    length: int
    q: int
    diffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "diffs", tuple(self.diffs))

    def __str__(self) -> str:
        return " ".join(map(str, self.diffs))

    def is_symmetric(self) -> bool:
        return self.diffs == self.diffs[::-1]


@dataclass(frozen=True)
class PalindromeList:
    length: int
    q: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def values(self) -> list[int]:
        return [word_to_integer(w) for w in self.words]

    def is_complete(self) -> bool:
        vals = self.values()
        return (len(vals) == palindrome_count(self.length, self.q)
                and all(a < b for a, b in zip(vals, vals[1:]))
                and all(is_palindrome(w) and len(w) == self.length for w in self.words))

    def __str__(self) -> str:
        return " ".join(map(str, self.words))


def _sorted_list(words, n: int, q: int) -> PalindromeList:
    return PalindromeList(n, q, tuple(sorted(set(words), key=word_to_integer)))


def extend_to_palindrome(u: Word, k: int) -> Word:
    """Mirror the half-word ``u`` into a palindrome of length ``k``."""
    if len(u) != half_length(k):
        raise ValueError(f"half-word of length {len(u)} does not match target length {k}")
    s = u.symbols
    tail = s[::-1] if k % 2 == 0 else s[-2::-1]
    return Word(s + tail, u.q)


def palindromes_from_de_bruijn(k: int, q: int, cap: int = DEFAULT_DEBRUIJN_CAP) -> PalindromeList:
    if k < 1:
        raise ValueError("palindrome length must be >= 1")
    h = half_length(k)
    db = generate_de_bruijn(q, h, cap=cap).word.symbols
    halves = (Word(db[i:i + h], q) for i in range(q**h))
    result = _sorted_list((extend_to_palindrome(u, k) for u in halves), k, q)
    assert len(result) == q**h
    return result


def lift_palindromes(pals: PalindromeList) -> PalindromeList:
    """Palindromes of length ``n + 2`` as ``x w x`` for each ``w`` and letter ``x``."""
    if not pals.is_complete():
        raise ValueError("lift_palindromes needs the complete list for its length")
    q = pals.q
    out = []
    for x in range(q):
        for w in pals.words:
            out.append(Word((x,) + w.symbols + (x,), q))
    return _sorted_list(out, pals.length + 2, q)


def lift_binary_values(values: Sequence[int], n: int) -> list[int]:
    """Binary lift on integer values: ``2w`` and ``2^(n+1) + 1 + 2w``.

    Every ``w`` lifts to ``0w0 = 2w`` and ``1w1 = 2^(n+1) + 1 + 2w``.
    """
    low = [2 * v for v in values]
    high = [2 ** (n + 1) + 1 + 2 * v for v in values]
    return low + high


def diff_representation(n: int, q: int) -> DiffRepresentation:
    """Gap sequence between consecutive length-``n`` palindromes.

    Built from the one-letter and two-letter base rows by alternately
    interleaving blocks of ``q - 1`` copies of ``q^k`` (even to odd) and
    ``(q + 1) q^k`` (odd to even).
    """
    if n < 1:
        raise ValueError("palindrome length must be >= 1")
    if q < 1:
        raise ValueError("alphabet size must be >= 1")
    if n % 2 == 1:
        diffs = [1] * (q - 1)
        k = 0
    else:
        diffs = [q + 1] * (q - 1)
        k = 1
    length = 1 if n % 2 == 1 else 2
    while length < n:
        if length % 2 == 1:
            # 2k+1 -> 2k+2: each separator q^k becomes (q+1) q^k; the
            # layout is blocks of q-1 separators around one inherited gap
            diffs = [(q + 1) * q**k if i % q != q - 1 else d for i, d in enumerate(diffs)]
            k += 1
        else:
            # 2k -> 2k+1: surround every gap with q-1 copies of q^k
            block = [q**k] * (q - 1)
            out = list(block)
            for d in diffs:
                out.append(d)
                out.extend(block)
            diffs = out
        length += 1
    return DiffRepresentation(n, q, tuple(diffs))


def palindromes_from_diffs(d: DiffRepresentation) -> PalindromeList:
    n, q = d.length, d.q
    bound = q**n
    values = [0, *accumulate(d.diffs)]
    for v in values:
        if v >= bound:
            raise ValueError(f"difference representation overflows {q}^{n}: reached {v}")
    if any(x <= 0 for x in d.diffs):
        raise ValueError("differences must be positive")
    return PalindromeList(n, q, tuple(integer_to_word(v, n, q) for v in values))


def enumerate_palindromes(n: int, q: int, cap: int = DEFAULT_DEBRUIJN_CAP) -> PalindromeList:
    if n < 1:
        raise ValueError("palindrome length must be >= 1")
    h = half_length(n)
    check_budget(q**h, cap, f"palindromes of length {n} over {q} letters")
    words = tuple(extend_to_palindrome(u, n) for u in Alphabet(q).words(h))
    return PalindromeList(n, q, words)
