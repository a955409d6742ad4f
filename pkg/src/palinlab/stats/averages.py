"""Exact averages of the palindrome count, by enumeration and by automata."""
from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..config import DEFAULT_AUTOMATON_CAP, check_budget
from ..eertree import palindrome_count
from ..palgen import half_length
from ..words import Word
from .automaton import AvoidanceAutomaton, autocorrelation
from .closed_forms import theorem_bound
from .enumeration import enumeration_totals


def round_half_away(x: Fraction, places: int = 5) -> str:
    """Decimal string of ``x`` rounded half away from zero, exactly ``places`` digits."""
    x = Fraction(x)
    scale = 10**places
    sign = "-" if x < 0 else ""
    scaled = abs(x) * scale
    units = int(scaled)
    if scaled - units >= Fraction(1, 2):
        units += 1
    whole, frac = divmod(units, scale)
    if places == 0:
        return f"{sign}{whole}"
    if units == 0:
        sign = ""
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class RationalAverage:
    """``M_q(n) = total / q^n`` kept as an exact rational."""

    q: int
    n: int
    total: int
    per_p: tuple[int, ...] = field(default=(), compare=False)

    @property
    def denominator(self) -> int:
        return self.q**self.n

    @property
    def value(self) -> Fraction:
        return Fraction(self.total, self.denominator)

    @property
    def normalized(self) -> Fraction:
        """``M_q(n) / n``."""
        return self.value / self.n

    def decimal(self, places: int = 5) -> str:
        return round_half_away(self.normalized, places)


def total_palindrome_complexity(w: Word) -> int:
    return palindrome_count(w.symbols, w.q)


def averages_by_enumeration(q: int, n_max: int, cap: int | None = None,
                            threads: int = 1) -> list[RationalAverage]:
    """``M_q(n)`` for ``n = 1..n_max`` from one exhaustive pass."""
    totals = enumeration_totals(q, n_max, cap=cap, threads=threads)
    return [RationalAverage(q, n, totals[n]) for n in range(1, n_max + 1)]


def average_exact_enumeration(q: int, n: int, cap: int | None = None,
                              threads: int = 1) -> RationalAverage:
    if n < 1:
        raise ValueError("n must be >= 1")
    return averages_by_enumeration(q, n, cap=cap, threads=threads)[-1]


def _palindromes(p: int, q: int):
    h = half_length(p)
    for half in itertools.product(range(q), repeat=h):
        tail = half[::-1] if p % 2 == 0 else half[-2::-1]
        yield bytes(half + tail)


def correlation_classes(p: int, q: int) -> Counter:
    """Palindromes of length ``p`` grouped by autocorrelation.

    Maps a representative pattern to the size of its class.
    """
    reps: dict[int, bytes] = {}
    sizes: Counter = Counter()
    for pal in _palindromes(p, q):
        key = autocorrelation(pal)
        if key not in reps:
            reps[key] = pal
        sizes[key] += 1
    return Counter({tuple(reps[k]): c for k, c in sizes.items()})


def _check_automaton_budget(q: int, n: int, p: int, cap: int) -> None:
    check_budget(q ** half_length(p) * p * n, cap, f"automaton counting for p={p}, n={n}, q={q}")


def snp_automaton(q: int, n: int, p: int, cap: int = DEFAULT_AUTOMATON_CAP,
                  group: bool = True) -> int:
    """Sum over all words of length ``n`` of their distinct length-``p`` palindromes.

    Each palindrome ``pi`` contributes ``q^n - avoid(pi, n)``.  With
    ``group`` the automaton runs once per autocorrelation class.
    """
    if not 1 <= p <= n:
        raise ValueError("need 1 <= p <= n")
    _check_automaton_budget(q, n, p, cap)
    total = 0
    if group:
        classes = correlation_classes(p, q).items()
    else:
        classes = ((tuple(pal), 1) for pal in _palindromes(p, q))
    for pattern, size in classes:
        avoid = AvoidanceAutomaton(pattern, q).count_avoiding(n)
        total += size * (q**n - avoid)
    return total


def occurrence_table(q: int, n_max: int, cap: int = DEFAULT_AUTOMATON_CAP) -> list[list[int]]:
    """``table[n][p] = S_{n,p}`` for ``1 <= p <= n <= n_max`` (zero elsewhere).

    One automaton run per autocorrelation class yields the avoidance counts
    for every length up to ``n_max`` at once.
    """
    table = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    for p in range(1, n_max + 1):
        _check_automaton_budget(q, n_max, p, cap)
        for pattern, size in correlation_classes(p, q).items():
            avoid = AvoidanceAutomaton(pattern, q).avoiding_counts(n_max)
            for n in range(p, n_max + 1):
                table[n][p] += size * (q**n - avoid[n])
    return table


def average_exact_automaton(q: int, n: int, cap: int = DEFAULT_AUTOMATON_CAP) -> RationalAverage:
    if n < 1:
        raise ValueError("n must be >= 1")
    per_p = tuple(snp_automaton(q, n, p, cap=cap) for p in range(1, n + 1))
    return RationalAverage(q, n, sum(per_p), per_p)


def averages_by_automaton(q: int, n_max: int, cap: int = DEFAULT_AUTOMATON_CAP) -> list[RationalAverage]:
    table = occurrence_table(q, n_max, cap=cap)
    return [RationalAverage(q, n, sum(table[n][1:n + 1]), tuple(table[n][1:n + 1]))
            for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class ConjectureVerdict:
    q: int
    values: dict[int, Fraction]
    violations: list[tuple[int, int]]

    @property
    def supported(self) -> bool:
        return not self.violations


def conjecture_scan(q: int, n_min: int, n_max: int, cap: int = DEFAULT_AUTOMATON_CAP) -> ConjectureVerdict:
    """Check that ``M_q(n) / n`` strictly decreases on ``[n_min, n_max]``.

    Comparisons are between exact rationals.  Every adjacent pair
    ``(n, n+1)`` with ``M_q(n+1)/(n+1) >= M_q(n)/n`` is reported.
    """
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    averages = averages_by_automaton(q, n_max, cap=cap)
    values = {a.n: a.normalized for a in averages if a.n >= n_min}
    violations = [(n, n + 1) for n in range(n_min, n_max) if values[n + 1] >= values[n]]
    return ConjectureVerdict(q, values, violations)


def bound_holds(avg: RationalAverage) -> bool:
    return avg.value <= theorem_bound(avg.q, avg.n)


def elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))
