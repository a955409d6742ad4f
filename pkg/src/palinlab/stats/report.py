"""StatsReport and its JSON / CSV forms.

JSON object keys, in order::

    q, n, method, m_exact {num, den}, m_decimal, per_p [{p, s_np}],
    bound, seed, samples, elapsed_ms

``m_exact`` is the average palindrome count ``M_q(n)`` as a fraction
(``den = q^n`` for exact methods, the sample count for Monte Carlo).
``m_decimal`` is ``M_q(n) / n`` and ``bound`` the upper bound on
``M_q(n)``, both as strings with exactly five decimals.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .averages import RationalAverage, round_half_away
from .closed_forms import theorem_bound

METHODS = ("enumeration", "automaton", "monte-carlo")

CSV_COLUMNS = ("q", "n", "method", "m_num", "m_den", "m_decimal", "bound",
               "seed", "samples", "elapsed_ms")


@dataclass(frozen=True)
class StatsReport:
    q: int
    n: int
    method: str
    total: int
    denominator: int
    per_p: tuple[int, ...] = ()
    bound: Fraction | None = None
    seed: int | None = None
    samples: int | None = None
    elapsed_ms: int | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        object.__setattr__(self, "per_p", tuple(self.per_p))

    @classmethod
    def from_average(cls, avg: RationalAverage, method: str, elapsed: int | None = None,
                     with_bound: bool = True) -> "StatsReport":
        bound = theorem_bound(avg.q, avg.n) if with_bound and avg.q >= 2 else None
        return cls(q=avg.q, n=avg.n, method=method, total=avg.total,
                   denominator=avg.denominator, per_p=avg.per_p, bound=bound,
                   elapsed_ms=elapsed)

    @property
    def m_exact(self) -> Fraction:
        return Fraction(self.total, self.denominator)

    @property
    def m_star(self) -> Fraction:
        return self.m_exact / self.n

    @property
    def m_decimal(self) -> str:
        return round_half_away(self.m_star)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "method": self.method,
            "m_exact": {"num": self.total, "den": self.denominator},
            "m_decimal": self.m_decimal,
            "per_p": [{"p": p, "s_np": s} for p, s in enumerate(self.per_p, start=1)],
            "bound": None if self.bound is None else round_half_away(self.bound),
            "seed": self.seed,
            "samples": self.samples,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StatsReport":
        per_p = [row["s_np"] for row in sorted(d.get("per_p", []), key=lambda r: r["p"])]
        bound = d.get("bound")
        return cls(q=d["q"], n=d["n"], method=d["method"],
                   total=d["m_exact"]["num"], denominator=d["m_exact"]["den"],
                   per_p=tuple(per_p),
                   bound=None if bound is None else Fraction(bound),
                   seed=d.get("seed"), samples=d.get("samples"),
                   elapsed_ms=d.get("elapsed_ms"))

    def csv_row(self) -> dict:
        d = self.to_dict()
        return {
            "q": self.q, "n": self.n, "method": self.method,
            "m_num": self.total, "m_den": self.denominator,
            "m_decimal": d["m_decimal"],
            "bound": "" if d["bound"] is None else d["bound"],
            "seed": "" if self.seed is None else self.seed,
            "samples": "" if self.samples is None else self.samples,
            "elapsed_ms": "" if self.elapsed_ms is None else self.elapsed_ms,
        }


def dumps_json(reports: Iterable[StatsReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def loads_json(text: str) -> list[StatsReport]:
    return [StatsReport.from_dict(d) for d in json.loads(text)]


def dumps_csv(reports: Iterable[StatsReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def _opt_int(text: str) -> int | None:
    return None if text == "" else int(text)


def loads_csv(text: str) -> list[StatsReport]:
    """Parse rows written by :func:`dumps_csv` (the per-p breakdown is not in CSV)."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(StatsReport(
            q=int(row["q"]), n=int(row["n"]), method=row["method"],
            total=int(row["m_num"]), denominator=int(row["m_den"]),
            bound=None if row["bound"] == "" else Fraction(row["bound"]),
            seed=_opt_int(row["seed"]), samples=_opt_int(row["samples"]),
            elapsed_ms=_opt_int(row["elapsed_ms"]),
        ))
    return out
