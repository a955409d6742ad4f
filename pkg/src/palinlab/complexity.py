"""Subword and palindrome complexity of finite words.

Subword counts and right valences come from a suffix automaton: every
state stands for the factors with lengths in ``(len(link), len]`` and all
of them share the state's out-degree as right valence.  Palindrome counts
and palindrome valences come from the palindromic tree, where the valence
of ``u`` is its number of children ``x u x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .eertree import PalindromicTree
from .errors import InvariantViolation
from .palgen import half_length
from .words import Word, palindromic_factors

SUBWORD = "subword"
PALINDROME = "palindrome"


@dataclass(frozen=True)
class ComplexityProfile:
    """Counts ``c(k)`` for ``k = 1..n`` of a word of length ``n``."""

    kind: str
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.n:
            raise ValueError("profile must have one count per length 1..n")

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k == 0:
            # only ε has length 0, and ε is not counted among palindromes
            return 1 if self.kind == SUBWORD else 0
        return self.counts[k - 1] if k <= self.n else 0

    def __iter__(self):
        return iter(self.counts)

    def as_list(self) -> list[int]:
        return list(self.counts)


@dataclass(frozen=True)
class ValenceTable:
    """``rows[k-1][j]`` counts the length-``k`` factors of valence ``j``."""

    kind: str
    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def s(self, j: int, k: int) -> int:
        if k < 1 or k > len(self.rows):
            return 0
        return self.rows[k - 1][j]

    def s0(self, k: int) -> int:
        return self.s(0, k)

    def totals(self) -> list[int]:
        return [sum(r) for r in self.rows]


@dataclass(frozen=True)
class TrapezoidShape:
    """``p`` increases on ``[0, J]``, is flat on ``[J, M]``, drops by 1 on ``[M, n]``."""

    J: int
    M: int
    n: int
    slope_ok: bool = True


class _SuffixAutomaton:
    __slots__ = ("length", "link", "trans", "last")

    def __init__(self, symbols: Sequence[int]):
        self.length = [0]
        self.link = [-1]
        self.trans: list[dict[int, int]] = [{}]
        self.last = 0
        for c in symbols:
            self._extend(c)

    def _extend(self, c: int) -> None:
        length, link, trans = self.length, self.link, self.trans
        cur = len(length)
        length.append(length[self.last] + 1)
        link.append(0)
        trans.append({})
        p = self.last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            r = trans[p][c]
            if length[p] + 1 == length[r]:
                link[cur] = r
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[r])
                trans.append(dict(trans[r]))
                while p != -1 and trans[p].get(c) == r:
                    trans[p][c] = clone
                    p = link[p]
                link[r] = clone
                link[cur] = clone
        self.last = cur


def _subword_tables(w: Word) -> tuple[list[int], list[list[int]]]:
    n, q = len(w), w.q
    sam = _SuffixAutomaton(w.symbols)
    # diff[j][k] accumulates +1 at the shortest and -1 past the longest length
    diff = [[0] * (n + 2) for _ in range(q + 1)]
    for v in range(1, len(sam.length)):
        j = len(sam.trans[v])
        lo = sam.length[sam.link[v]] + 1
        hi = sam.length[v]
        diff[j][lo] += 1
        diff[j][hi + 1] -= 1
    rows = [[0] * (q + 1) for _ in range(n)]
    for j in range(q + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += diff[j][k]
            rows[k - 1][j] = acc
    counts = [sum(r) for r in rows]
    return counts, rows


def subword_complexity_profile(w: Word) -> ComplexityProfile:
    if len(w) < 1:
        raise ValueError("profile needs a nonempty word")
    counts, _ = _subword_tables(w)
    return ComplexityProfile(SUBWORD, len(w), counts)


def right_valence_table(w: Word) -> ValenceTable:
    """Per length ``k``, how many factors have exactly ``j`` right extensions."""
    _, rows = _subword_tables(w)
    table = ValenceTable(SUBWORD, w.q, rows)
    for k in range(1, len(w) + 1):
        if table.s0(k) not in (0, 1):
            raise InvariantViolation(f"s0({k}) = {table.s0(k)} for {w}")
    return table


def check_subword_iteration(w: Word) -> bool:
    """p(k+1) == p(k) + sum_j (j - 1) s(j, k) for k = 1..n-1."""
    counts, rows = _subword_tables(w)
    for k in range(1, len(w)):
        rhs = counts[k - 1] + sum((j - 1) * s for j, s in enumerate(rows[k - 1]))
        if counts[k] != rhs:
            return False
    return True


def _segment(values: Sequence[int]) -> TrapezoidShape | None:
    n = len(values) - 1
    J = 0
    while J < n and values[J + 1] > values[J]:
        J += 1
    M = J
    while M < n and values[M + 1] == values[M]:
        M += 1
    for k in range(M, n):
        if values[k + 1] != values[k] - 1:
            return None
    return TrapezoidShape(J, M, n)


def is_trapezoidal(values: Sequence[int]) -> bool:
    """Whether a sequence indexed from 0 rises strictly, stays flat, then drops by 1."""
    return _segment(values) is not None


def trapezoid_shape(profile: ComplexityProfile) -> TrapezoidShape:
    """Locate the rise / plateau / slope -1 segmentation of a subword profile.

    ``J`` is the first length at which ``p`` stops strictly increasing and
    ``M`` the last length of the plateau that follows.  Profiles of real
    words always segment this way; anything else raises.
    """
    if profile.kind != SUBWORD:
        raise ValueError("trapezoid segmentation applies to subword profiles")
    values = [profile[k] for k in range(profile.n + 1)]
    shape = _segment(values)
    if shape is None:
        raise InvariantViolation(f"subword profile {values} is not trapezoidal")
    return shape


def palindrome_profile_eertree(w: Word) -> ComplexityProfile:
    tree = PalindromicTree(w.q, w.symbols)
    return ComplexityProfile(PALINDROME, len(w), tree.length_histogram())


def palindrome_profile_naive(w: Word) -> ComplexityProfile:
    hist = [0] * len(w)
    for u in palindromic_factors(w):
        hist[len(u) - 1] += 1
    return ComplexityProfile(PALINDROME, len(w), hist)


def palindrome_valence_table(w: Word) -> ValenceTable:
    """``s_p(j, k)``: palindromic factors ``u`` of length ``k`` with exactly
    ``j`` letters ``x`` such that ``x u x`` is again a factor of ``w``."""
    tree = PalindromicTree(w.q, w.symbols)
    return ValenceTable(PALINDROME, w.q, tree.valence_histogram())


def check_palindrome_iteration(w: Word) -> bool:
    """pal(k+2) == pal(k) + sum_j (j - 1) s_p(j, k) for k = 1..n-2."""
    tree = PalindromicTree(w.q, w.symbols)
    counts = tree.length_histogram()
    rows = tree.valence_histogram()
    for k in range(1, len(w) - 1):
        rhs = counts[k - 1] + sum((j - 1) * s for j, s in enumerate(rows[k - 1]))
        if counts[k + 1] != rhs:
            return False
    return True


def odd_even_projection(profile: ComplexityProfile) -> tuple[dict[int, int], dict[int, int]]:
    if profile.kind != PALINDROME:
        raise ValueError("odd/even projection applies to palindrome profiles")
    odd = {k: profile[k] for k in range(1, profile.n + 1, 2)}
    even = {k: profile[k] for k in range(2, profile.n + 1, 2)}
    return odd, even


def check_complexity_bounds(w: Word) -> bool:
    """pal(k) <= p(k) and pal(k) <= min(q^ceil(k/2), n - k + 1) for all k."""
    n, q = len(w), w.q
    if n == 0:
        return True
    p = subword_complexity_profile(w)
    pal = palindrome_profile_eertree(w)
    for k in range(1, n + 1):
        if pal[k] > p[k] or pal[k] > min(q ** half_length(k), n - k + 1):
            return False
    return True
