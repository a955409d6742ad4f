"""Palindrome-abundance statistics over all words of a given length."""
from .automaton import AvoidanceAutomaton, autocorrelation, avoid_count, failure_function
from .averages import (
    ConjectureVerdict,
    RationalAverage,
    average_exact_automaton,
    average_exact_enumeration,
    averages_by_automaton,
    averages_by_enumeration,
    bound_holds,
    conjecture_scan,
    correlation_classes,
    occurrence_table,
    round_half_away,
    snp_automaton,
    total_palindrome_complexity,
)
from .closed_forms import (
    asymptotic_limits,
    psi_closed_form,
    psi_recurrence,
    sn1_closed,
    sn2_closed,
    theorem_bound,
    theorem_bound_sum,
)
from .enumeration import enumeration_totals
from .montecarlo import monte_carlo_average, monte_carlo_counts, monte_carlo_estimate, sample_word
from .report import StatsReport, dumps_csv, dumps_json, loads_csv, loads_json

__all__ = [name for name in dir() if not name.startswith("_")]
