import itertools
import random

import pytest

from palinlab.words import Word, palindromic_factors


def all_words(q, n):
    return itertools.product(range(q), repeat=n)


def contains(word, pattern):
    m = len(pattern)
    return any(tuple(word[i:i + m]) == tuple(pattern) for i in range(len(word) - m + 1))


def brute_avoid(pattern, q, n):
    return sum(1 for w in all_words(q, n) if not contains(w, pattern))


def brute_total_P(q, n):
    return sum(len(palindromic_factors(Word(w, q))) for w in all_words(q, n))


def brute_snp(q, n, p):
    """Iverson-style count: sum over words of distinct length-p palindromic factors."""
    total = 0
    for w in all_words(q, n):
        total += sum(1 for u in palindromic_factors(Word(w, q)) if len(u) == p)
    return total


def random_word(rng, q, n):
    return Word(tuple(rng.randrange(q) for _ in range(n)), q)


@pytest.fixture
def rng():
    return random.Random(20240611)


W1 = "1010000011000000010"
W2 = "1111" + "0" * 6 + "1" + "0" * 8 + "11" + "0"


ACCEPTANCE_LINES = []


def record(criterion, ok, detail):
    """Print and keep one pass/fail line for an acceptance criterion."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
