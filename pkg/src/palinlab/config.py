"""Resource caps.

Caps are plain integers compared against the size of the search space a
routine would touch.  ``PALINLAB_BUDGET`` overrides the enumeration cap.
"""
from __future__ import annotations

import os

from .errors import BudgetExceeded

DEFAULT_ENUMERATION_CAP = 2**26
DEFAULT_AUTOMATON_CAP = 2**30
DEFAULT_DEBRUIJN_CAP = 2**24

ENV_BUDGET = "PALINLAB_BUDGET"


def enumeration_cap() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None or raw == "":
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise ValueError(f"{ENV_BUDGET} must be positive, got {cap}")
    return cap


def check_budget(size: int, cap: int, what: str, hint: str = "") -> None:
    if size > cap:
        msg = f"{what}: size {size} exceeds cap {cap}"
        if hint:
            msg += f" ({hint})"
        raise BudgetExceeded(msg)
