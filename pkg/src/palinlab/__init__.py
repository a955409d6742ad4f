"""Generate, count and analyse palindromic factors of finite words."""
from .debruijn import DeBruijnWord, generate_de_bruijn, verify_de_bruijn
from .errors import BudgetExceeded, InvariantViolation, PalinlabError
from .words import (
    Alphabet,
    Word,
    WindowClassification,
    classify_uniform_palindromic_windows,
    factors_of_length,
    integer_to_word,
    is_palindrome,
    palindromic_factors,
    reverse,
    word_to_integer,
)

__version__ = "0.1.0"
