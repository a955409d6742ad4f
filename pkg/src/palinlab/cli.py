"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 budget exceeded, 4 an identity or
bound that must hold was violated.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
import time

from . import complexity as cx
from .config import DEFAULT_AUTOMATON_CAP, DEFAULT_DEBRUIJN_CAP, enumeration_cap
from .debruijn import generate_de_bruijn, verify_de_bruijn
from .errors import BudgetExceeded, InvariantViolation
from .palgen import (
    diff_representation,
    enumerate_palindromes,
    palindromes_from_de_bruijn,
    palindromes_from_diffs,
)
from .stats import (
    StatsReport,
    asymptotic_limits,
    average_exact_automaton,
    averages_by_automaton,
    averages_by_enumeration,
    bound_holds,
    conjecture_scan,
    dumps_csv,
    dumps_json,
    monte_carlo_average,
    psi_recurrence,
    round_half_away,
    sn1_closed,
    sn2_closed,
    snp_automaton,
    theorem_bound,
)
from .stats.averages import elapsed_ms
from .words import Word, classify_uniform_palindromic_windows

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"8"`` or inclusive ``"lo..hi"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    return lo, hi


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _alphabet(args) -> int:
    if args.q < 1:
        raise UsageError("-q must be >= 1")
    return args.q


def cmd_debruijn(args) -> int:
    q = _alphabet(args)
    db = generate_de_bruijn(q, args.k, cap=args.cap)
    valid = verify_de_bruijn(db.word, args.k)
    _emit(f"{db}\nlength: {len(db.word)}\nvalid: {str(valid).lower()}\n", args)
    return EXIT_OK if valid else EXIT_INVARIANT


def cmd_palindromes(args) -> int:
    q, n = _alphabet(args), args.n
    diffs = None
    if args.method == "debruijn":
        pals = palindromes_from_de_bruijn(n, q, cap=args.cap)
    elif args.method == "diffs":
        diffs = diff_representation(n, q)
        pals = palindromes_from_diffs(diffs)
    else:
        pals = enumerate_palindromes(n, q, cap=args.cap)
    if args.format == "json":
        d = {"q": q, "n": n, "method": args.method,
             "palindromes": [str(w) for w in pals],
             "values": pals.values()}
        if diffs is not None:
            d["diffs"] = list(diffs.diffs)
        _emit(json.dumps(d, indent=2) + "\n", args)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "palindrome", "value"])
        for i, (w, v) in enumerate(zip(pals, pals.values())):
            writer.writerow([i, str(w), v])
        _emit(buf.getvalue(), args)
    else:
        lines = [str(pals)]
        if diffs is not None:
            lines.append(f"diffs: {diffs}")
        lines.append(f"count: {len(pals)}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _read_word(args) -> Word:
    if args.file:
        with open(args.file) as fh:
            text = "".join(fh.read().split())
    elif args.word is not None:
        text = args.word
    else:
        raise UsageError("give a word literal or --file")
    try:
        return Word.parse(text, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _valence_rows(kind: str, profile, table, q: int):
    for k in range(1, profile.n + 1):
        yield [kind, k, profile[k], *(table.s(j, k) for j in range(q + 1))]


def cmd_profile(args) -> int:
    w = _read_word(args)
    q = w.q
    if len(w) == 0:
        raise UsageError("profile needs a nonempty word")
    kinds = ["subword", "palindrome"] if args.kind == "both" else [args.kind]
    rows = []
    if "subword" in kinds:
        rows += _valence_rows("subword", cx.subword_complexity_profile(w), cx.right_valence_table(w), q)
    pal = cx.palindrome_profile_eertree(w)
    if "palindrome" in kinds:
        rows += _valence_rows("palindrome", pal, cx.palindrome_valence_table(w), q)

    verdicts = {}
    try:
        verdicts["trapezoid"] = cx.trapezoid_shape(cx.subword_complexity_profile(w))
    except InvariantViolation:
        verdicts["trapezoid"] = None
    verdicts["subword-iteration"] = cx.check_subword_iteration(w)
    verdicts["palindrome-iteration"] = cx.check_palindrome_iteration(w)
    verdicts["bounds"] = cx.check_complexity_bounds(w)
    ok = all(v is not None and v is not False for v in verdicts.values())

    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "k", "count", *(f"v{j}" for j in range(q + 1))])
        writer.writerows(rows)
        _emit(buf.getvalue(), args)
    else:
        odd, even = cx.odd_even_projection(pal)
        out = [f"word: {w}  (n={len(w)}, q={q})"]
        header = "kind        k  count  " + " ".join(f"v{j}" for j in range(q + 1))
        out.append(header)
        for kind, k, count, *vals in rows:
            out.append(f"{kind:<10} {k:>2}  {count:>5}  " + " ".join(str(v) for v in vals))
        out.append("odd:  " + " ".join(f"{k}:{v}" for k, v in odd.items()))
        out.append("even: " + " ".join(f"{k}:{v}" for k, v in even.items()))
        t = verdicts["trapezoid"]
        out.append("trapezoid: " + ("FAIL" if t is None else f"ok J={t.J} M={t.M}"))
        for name in ("subword-iteration", "palindrome-iteration", "bounds"):
            out.append(f"{name}: {'ok' if verdicts[name] else 'FAIL'}")
        _emit("\n".join(out) + "\n", args)
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_classify(args) -> int:
    w = _read_word(args)
    if args.k < 2:
        raise UsageError("-k must be >= 2")
    if len(w) < args.k:
        raise UsageError(f"word of length {len(w)} has no windows of length {args.k}")
    result = classify_uniform_palindromic_windows(w, args.k)
    line = f"{result.kind}"
    if result.failing_position is not None:
        line += f" at position {result.failing_position}"
    if result.letters is not None:
        line += f" letters {result.letters[0]},{result.letters[1]}"
    _emit(line + "\n", args)
    return EXIT_OK


def _format_reports(reports, args) -> str:
    if args.format == "json":
        return dumps_json(reports)
    if args.format == "csv":
        return dumps_csv(reports)
    lines = [f"{'q':>2} {'n':>4} {'method':<12} {'M*(n)':>8} {'bound':>10}"]
    for r in reports:
        bound = "-" if r.bound is None else round_half_away(r.bound)
        lines.append(f"{r.q:>2} {r.n:>4} {r.method:<12} {r.m_decimal:>8} {bound:>10}")
    return "\n".join(lines) + "\n"


def _timing(args, start):
    return None if args.no_timing else elapsed_ms(start)


def cmd_average(args) -> int:
    q = _alphabet(args)
    if q < 2:
        raise UsageError("statistics need q >= 2")
    lo, hi = args.n
    reports = []
    enum = auto = None
    if args.method in ("enum", "both"):
        start = time.perf_counter()
        enum = averages_by_enumeration(q, hi, cap=args.enum_cap, threads=args.threads)
        t = _timing(args, start)
        reports += [StatsReport.from_average(a, "enumeration", t) for a in enum if a.n >= lo]
    if args.method in ("automaton", "both"):
        start = time.perf_counter()
        if lo == hi:
            auto = [average_exact_automaton(q, hi, cap=args.automaton_cap)]
        else:
            auto = [a for a in averages_by_automaton(q, hi, cap=args.automaton_cap) if a.n >= lo]
        t = _timing(args, start)
        reports += [StatsReport.from_average(a, "automaton", t) for a in auto]
    if enum is not None and auto is not None:
        by_n = {a.n: a for a in enum}
        for a in auto:
            if by_n[a.n].value != a.value:
                raise InvariantViolation(f"methods disagree at n={a.n}: {by_n[a.n].value} != {a.value}")
    for avg in (enum or []) + (auto or []):
        if avg.n >= lo and not bound_holds(avg):
            raise InvariantViolation(f"M_{q}({avg.n}) exceeds its upper bound")
    reports.sort(key=lambda r: (r.n, r.method))
    _emit(_format_reports(reports, args), args)
    return EXIT_OK


def cmd_mc(args) -> int:
    q = _alphabet(args)
    if q < 2:
        raise UsageError("statistics need q >= 2")
    lo, hi = args.n
    reports = []
    for n in range(lo, hi + 1):
        report = monte_carlo_average(q, n, args.samples, args.seed, threads=args.threads)
        if args.no_timing:
            report = dataclasses.replace(report, elapsed_ms=None)
        reports.append(report)
    _emit(_format_reports(reports, args), args)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    q = _alphabet(args)
    if q < 2:
        raise UsageError("statistics need q >= 2")
    lo, hi = args.n
    verdict = conjecture_scan(q, lo, hi, cap=args.automaton_cap)
    if args.format == "json":
        d = {"q": q, "n_min": lo, "n_max": hi,
             "values": [{"n": n, "num": v.numerator, "den": v.denominator,
                         "m_decimal": round_half_away(v)} for n, v in verdict.values.items()],
             "violations": [list(p) for p in verdict.violations],
             "supported": verdict.supported}
        _emit(json.dumps(d, indent=2) + "\n", args)
    else:
        lines = [f"n={n}: {round_half_away(v)}" for n, v in verdict.values.items()]
        if verdict.violations:
            lines += [f"violation: M({a})/{a} <= M({b})/{b}" for a, b in verdict.violations]
        lines.append("strictly decreasing: " + ("yes" if verdict.supported else "no"))
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_closed(args) -> int:
    q, n = _alphabet(args), args.n
    if q < 2:
        raise UsageError("closed forms need q >= 2")
    if n < 2:
        raise UsageError("-n must be >= 2")
    exact2, approx2 = sn2_closed(q, n)
    limits = asymptotic_limits(q)
    d = {
        "q": q, "n": n,
        "s_n1": sn1_closed(q, n),
        "s_n2": exact2,
        "s_n2_float": f"{approx2:.5f}",
        "psi": psi_recurrence(q, n),
        "bound": round_half_away(theorem_bound(q, n)),
        "c1": round_half_away(limits["c1"]),
        "c3": round_half_away(limits["c3"]),
    }
    if args.format == "json":
        _emit(json.dumps(d, indent=2) + "\n", args)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in d.items()), args)
    return EXIT_OK


def cmd_snp(args) -> int:
    q = _alphabet(args)
    if not 1 <= args.p <= args.n:
        raise UsageError("need 1 <= p <= n")
    _emit(f"{snp_automaton(q, args.n, args.p, cap=args.automaton_cap)}\n", args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="palinlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("-q", type=int, default=2, help="alphabet size (default 2)")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        if fmt:
            p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("debruijn", help="generate and verify a De Bruijn word")
    common(p, fmt=False)
    p.add_argument("-k", type=positive_int, required=True, help="order")
    p.add_argument("--cap", type=positive_int, default=DEFAULT_DEBRUIJN_CAP)
    p.set_defaults(func=cmd_debruijn)

    p = sub.add_parser("palindromes", help="list all palindromes of one length")
    common(p)
    p.add_argument("-n", type=positive_int, required=True)
    p.add_argument("--method", choices=("debruijn", "diffs", "enum"), default="enum")
    p.add_argument("--cap", type=positive_int, default=DEFAULT_DEBRUIJN_CAP)
    p.set_defaults(func=cmd_palindromes)

    for name, func, helptext in (("profile", cmd_profile, "complexity profiles of a word"),
                                 ("classify", cmd_classify, "check that all k-windows are palindromes")):
        p = sub.add_parser(name, help=helptext)
        common(p, fmt=False)
        p.add_argument("word", nargs="?", help="digit string, or comma-separated for q > 10")
        p.add_argument("--file", help="read the word from a file")
        p.set_defaults(func=func)
    profile_p = sub.choices["profile"]
    kind = profile_p.add_mutually_exclusive_group()
    kind.add_argument("--palindrome", dest="kind", action="store_const", const="palindrome")
    kind.add_argument("--subword", dest="kind", action="store_const", const="subword")
    profile_p.set_defaults(kind="both")
    profile_p.add_argument("--csv", action="store_true", help="emit CSV rows")
    sub.choices["classify"].add_argument("-k", type=int, required=True)

    def stats_flags(p):
        p.add_argument("-n", type=parse_range, required=True, help="N or inclusive LO..HI")
        p.add_argument("--threads", type=positive_int, default=1)
        p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
        p.add_argument("--enum-cap", type=positive_int, default=None,
                       help=f"enumeration cap (default {enumeration_cap()}, or $PALINLAB_BUDGET)")
        p.add_argument("--automaton-cap", type=positive_int, default=DEFAULT_AUTOMATON_CAP)

    p = sub.add_parser("average", help="exact average palindrome count")
    common(p)
    stats_flags(p)
    p.add_argument("--method", choices=("enum", "automaton", "both"), default="automaton")
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("mc", help="Monte Carlo estimate of M(n)/n")
    common(p)
    stats_flags(p)
    p.add_argument("-l", "--samples", type=positive_int, default=200)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("conjecture", help="check that M(n)/n strictly decreases")
    common(p)
    stats_flags(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("closed", help="closed forms and bounds for one n")
    common(p)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("snp", help="S(n,p) by automaton counting")
    common(p, fmt=False)
    p.add_argument("-n", type=positive_int, required=True)
    p.add_argument("-p", type=positive_int, required=True)
    p.add_argument("--automaton-cap", type=positive_int, default=DEFAULT_AUTOMATON_CAP)
    p.set_defaults(func=cmd_snp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"palinlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"palinlab {args.command}: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"palinlab {args.command}: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"palinlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
