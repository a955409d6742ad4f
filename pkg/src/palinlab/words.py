"""Finite words over the integer alphabet ``{0, ..., q-1}``.

A :class:`Word` is an immutable tuple of symbols tagged with its alphabet
size.  Words render as digit strings when ``q <= 10`` and as
comma-separated integers otherwise; :meth:`Word.parse` accepts both forms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvariantViolation


@dataclass(frozen=True)
class Alphabet:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise ValueError(f"alphabet size must be an integer >= 1, got {self.q!r}")

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.q))

    def __contains__(self, symbol) -> bool:
        return isinstance(symbol, int) and 0 <= symbol < self.q

    def words(self, n: int) -> Iterator["Word"]:
        """All words of length ``n`` in lexicographic (= numeric) order."""
        for symbols in itertools.product(range(self.q), repeat=n):
            yield Word(symbols, self.q)


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise ValueError(f"alphabet size must be an integer >= 1, got {self.q!r}")
        symbols = tuple(self.symbols)
        for i, s in enumerate(symbols):
            if not isinstance(s, int) or not 0 <= s < self.q:
                raise ValueError(f"symbol {s!r} at index {i} is outside [0, {self.q})")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        """Read a word from its text rendering.

        ``""`` and ``"ε"`` give the empty word.  Text containing a comma is
        read as comma-separated integers, anything else as one digit per
        symbol.
        """
        text = text.strip()
        if text in ("", "ε"):
            return cls((), q)
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            if q > 10:
                raise ValueError("words over more than 10 letters need comma-separated symbols")
            parts = list(text)
        try:
            symbols = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
        return cls(symbols, q)

    @classmethod
    def repeat(cls, symbol: int, k: int, q: int) -> "Word":
        return cls((symbol,) * k, q)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index], self.q)
        return self.symbols[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.q != self.q:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.q)

    def __str__(self) -> str:
        return render(self.symbols, self.q)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, q={self.q})"


def render(symbols: Sequence[int], q: int) -> str:
    if not symbols:
        return "ε"
    if q <= 10:
        return "".join(map(str, symbols))
    return ",".join(map(str, symbols))


def reverse(w: Word) -> Word:
    return Word(w.symbols[::-1], w.q)


def is_palindrome(w: Word) -> bool:
    s = w.symbols
    return s == s[::-1]


def factors_of_length(w: Word, k: int) -> frozenset[Word]:
    """Distinct factors of ``w`` of length ``k`` (``{ε}`` for ``k == 0``)."""
    if k < 0:
        raise ValueError("factor length must be >= 0")
    s = w.symbols
    if k > len(s):
        return frozenset()
    return frozenset(Word(s[i:i + k], w.q) for i in range(len(s) - k + 1))


def palindromic_factors(w: Word) -> frozenset[Word]:
    """Distinct nonempty palindromic factors, by testing every factor.

    Quadratically many factors are tested; this is the reference the
    palindromic tree is checked against.
    """
    s = bytes(w.symbols) if w.q <= 256 else w.symbols
    n = len(s)
    found = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = s[i:j]
            if u == u[::-1]:
                found.add(u)
    return frozenset(Word(tuple(u), w.q) for u in found)


@dataclass(frozen=True)
class WindowClassification:
    """Outcome of :func:`classify_uniform_palindromic_windows`.

    ``kind`` is one of

    * ``"fails"``: the window starting at 1-based ``failing_position`` is
      not a palindrome;
    * ``"degenerate"``: every window is the same palindrome;
    * ``"alternating"``: the windows are pairwise distinct, which forces
      ``w = (ab)^(n/2)`` with ``k = n - 1``;
    * ``"periodic"``: all windows are palindromes but some repeat; ``w``
      alternates two letters and ``k`` is odd.
    """

    kind: str
    failing_position: int | None = None
    letters: tuple[int, int] | None = None

    @property
    def holds(self) -> bool:
        return self.kind != "fails"


def classify_uniform_palindromic_windows(w: Word, k: int) -> WindowClassification:
    """Decide whether every length-``k`` factor of ``w`` is a palindrome.

    When it is, the structure forced by that property is verified and an
    :class:`InvariantViolation` is raised if it is absent.
    """
    n = len(w)
    if k < 2:
        raise ValueError("window length must be >= 2")
    if n < k:
        raise ValueError(f"word of length {n} has no windows of length {k}")
    s = w.symbols
    windows = [s[i:i + k] for i in range(n - k + 1)]
    for i, u in enumerate(windows):
        if u != u[::-1]:
            return WindowClassification("fails", failing_position=i + 1)

    distinct = set(windows)
    if len(distinct) == 1:
        return WindowClassification("degenerate")

    a, b = s[0], s[1]
    alternating = a != b and all(x == (a if i % 2 == 0 else b) for i, x in enumerate(s))
    if not (alternating and k % 2 == 1):
        raise InvariantViolation(f"{w} has palindromic {k}-windows but is not alternating")
    if len(distinct) == len(windows):
        if n % 2 != 0 or k != n - 1:
            raise InvariantViolation(f"{w} has distinct palindromic windows but n={n}, k={k}")
        return WindowClassification("alternating", letters=(a, b))
    return WindowClassification("periodic", letters=(a, b))


def word_to_integer(w: Word) -> int:
    """Radix-``q`` value of ``w`` with the first symbol most significant."""
    value = 0
    for s in w.symbols:
        value = value * w.q + s
    return value


def integer_to_word(v: int, n: int, q: int) -> Word:
    if n < 0:
        raise ValueError("length must be >= 0")
    if not 0 <= v < q**n:
        raise ValueError(f"{v} is not in [0, {q}^{n})")
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        v, digits[i] = divmod(v, q)
    return Word(tuple(digits), q)


def as_word(obj: Word | str | Iterable[int], q: int) -> Word:
    if isinstance(obj, Word):
        if obj.q != q:
            raise ValueError(f"word is over {obj.q} letters, expected {q}")
        return obj
    if isinstance(obj, str):
        return Word.parse(obj, q)
    return Word(tuple(obj), q)
