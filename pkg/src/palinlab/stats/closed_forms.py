"""Closed forms for length-1 and length-2 palindrome occurrences and the
upper bounds on the average palindrome count."""
from __future__ import annotations

import math
from fractions import Fraction


def sn1_closed(q: int, n: int) -> int:
    """Total over all words of length ``n`` of the number of distinct letters used."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return q ** (n + 1) - q * (q - 1) ** n


def psi_recurrence(q: int, n: int) -> int:
    """Words of length ``n`` avoiding ``aa`` for one fixed letter ``a``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    prev, cur = q**2 - 1, q**3 - 2 * q + 1
    if n == 2:
        return prev
    for _ in range(n - 3):
        prev, cur = cur, (q - 1) * (cur + prev)
    return cur


def psi_closed_form(q: int, n: int) -> float:
    """Binet-style solution of ``psi(n) = (q-1)(psi(n-1) + psi(n-2))``.

    The characteristic roots are ``((q-1) +- sqrt(q^2 + 2q - 3)) / 2``.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    root = math.sqrt(q * q + 2 * q - 3)
    r1 = (q - 1 + root) / 2
    r2 = (q - 1 - root) / 2
    return (r1 ** (n + 2) - r2 ** (n + 2)) / ((q - 1) * root)


def sn2_closed(q: int, n: int) -> tuple[int, float]:
    """``(exact, floating)`` total occurrences of length-2 palindromes."""
    if n < 2:
        raise ValueError("n must be >= 2")
    exact = q * (q**n - psi_recurrence(q, n))
    approx = q ** (n + 1) - q * psi_closed_form(q, n)
    return exact, approx


def theorem_bound(q: int, n: int) -> Fraction:
    """Upper bound on the average palindrome count over words of length ``n``."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    tail = 2 * n * (q - 1) + q**3 - 2 * q**2 - 2 * q - 1
    if n % 2:
        head = Fraction(q + 3, q ** ((n - 1) // 2))
    else:
        head = Fraction(3 * q + 1, q ** (n // 2))
    return (head + tail) / (q - 1) ** 2


def theorem_bound_sum(q: int, n: int) -> Fraction:
    """``q + sum_{k=2}^{n} (n-k+1) q^(ceil(k/2)-k)``, the sum the bound comes from."""
    total = Fraction(q)
    for k in range(2, n + 1):
        total += Fraction(n - k + 1, q ** (k - (k + 1) // 2))
    return total


def asymptotic_limits(q: int) -> dict[str, Fraction]:
    """Upper bounds on ``limsup M_q(n)/n``: ``c1`` from the rough bound and
    ``c3`` from the refined count of length-2 palindromes."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return {"c1": Fraction(2, q - 1), "c3": Fraction(q + 1, q * (q - 1))}
