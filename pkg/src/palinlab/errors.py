"""Exception types shared across palinlab."""


class PalinlabError(Exception):
    """Base class for library errors."""


class BudgetExceeded(PalinlabError):
    """Raised when a computation would exceed a configured resource cap."""


class InvariantViolation(PalinlabError):
    """An identity or bound that must hold was found violated.

    Seeing this means a defect in the library, not bad input.
    """
