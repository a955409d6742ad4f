import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from palinlab.complexity import (
    ComplexityProfile,
    check_complexity_bounds,
    check_palindrome_iteration,
    check_subword_iteration,
    is_trapezoidal,
    odd_even_projection,
    palindrome_profile_eertree,
    palindrome_profile_naive,
    palindrome_valence_table,
    right_valence_table,
    subword_complexity_profile,
    trapezoid_shape,
)
from palinlab.eertree import PalindromicTree
from palinlab.errors import InvariantViolation
from palinlab.words import Word, palindromic_factors, reverse

from conftest import W1, W2, random_word


def W(text, q=2):
    return Word.parse(text, q)


def naive_subword_tables(w):
    """Factor sets and right valences by direct enumeration."""
    s, q, n = w.symbols, w.q, len(w)
    counts, rows = [], []
    for k in range(1, n + 1):
        fk = {s[i:i + k] for i in range(n - k + 1)}
        fk1 = {s[i:i + k + 1] for i in range(n - k)}
        ext = Counter(u[:-1] for u in fk1)
        row = [0] * (q + 1)
        for u in fk:
            row[ext[u]] += 1
        counts.append(len(fk))
        rows.append(tuple(row))
    return counts, rows


def naive_palindrome_valence(w):
    pals = {u.symbols for u in palindromic_factors(w)}
    rows = [[0] * (w.q + 1) for _ in range(len(w))]
    for u in pals:
        j = sum(1 for x in range(w.q) if (x,) + u + (x,) in pals)
        rows[len(u) - 1][j] += 1
    return [tuple(r) for r in rows]


words = st.integers(1, 5).flatmap(
    lambda q: st.lists(st.integers(0, q - 1), min_size=1, max_size=40).map(lambda s: Word(tuple(s), q)))


class TestSubwordProfile:
    @pytest.mark.parametrize("text,expected", [("0110", [2, 3, 2, 1]), ("0000", [1, 1, 1, 1])])
    def test_examples(self, text, expected):
        assert subword_complexity_profile(W(text)).as_list() == expected

    def test_de_bruijn_word_has_all_pairs(self):
        assert subword_complexity_profile(W("01100"))[2] == 4

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            subword_complexity_profile(W(""))

    def test_indexing_outside_range(self):
        p = subword_complexity_profile(W("0110"))
        assert p[0] == 1 and p[5] == 0

    @given(words)
    def test_matches_factor_enumeration(self, w):
        counts, rows = naive_subword_tables(w)
        assert subword_complexity_profile(w).as_list() == counts
        assert list(right_valence_table(w).rows) == rows

    @given(words)
    def test_profile_invariants(self, w):
        p = subword_complexity_profile(w)
        n = len(w)
        assert p[n] == 1
        for k in range(1, n + 1):
            assert p[k] <= min(w.q**k, n - k + 1)


class TestRightValence:
    def test_first_example(self):
        t = right_valence_table(W("0110"))
        assert (t.s(0, 1), t.s(1, 1), t.s(2, 1)) == (0, 1, 1)

    def test_unary(self):
        t = right_valence_table(W("0000"))
        assert [t.s0(k) for k in range(1, 5)] == [0, 0, 0, 1]
        assert [t.s(1, k) for k in range(1, 4)] == [1, 1, 1]

    def test_random_rows_sum_to_profile(self, rng):
        for _ in range(1000):
            w = random_word(rng, rng.choice((2, 3, 5)), rng.randint(1, 60))
            t = right_valence_table(w)
            assert t.totals() == subword_complexity_profile(w).as_list()
            assert all(t.s0(k) in (0, 1) for k in range(1, len(w) + 1))


class TestIterationEquations:
    @pytest.mark.parametrize("text", ["0110", "0000", W1, W2])
    def test_examples(self, text):
        w = W(text)
        assert check_subword_iteration(w)
        assert check_palindrome_iteration(w)

    def test_drop_from_three_to_one(self):
        w = W(W1)
        pal = palindrome_profile_eertree(w)
        sp = palindrome_valence_table(w)
        assert pal[3] == 3 and pal[5] == 1
        assert pal[5] == pal[3] + sum((j - 1) * sp.s(j, 3) for j in range(3))

    @given(words)
    def test_hold_on_random_words(self, w):
        assert check_subword_iteration(w)
        assert check_palindrome_iteration(w)


class TestTrapezoid:
    def test_first_example(self):
        shape = trapezoid_shape(subword_complexity_profile(W("0110")))
        assert (shape.J, shape.M) == (2, 2)

    def test_unary(self):
        shape = trapezoid_shape(subword_complexity_profile(W("0000")))
        assert (shape.J, shape.M) == (0, 4)

    def test_rejects_palindrome_profile(self):
        with pytest.raises(ValueError):
            trapezoid_shape(palindrome_profile_eertree(W("0110")))

    def test_violation_raises(self):
        fake = ComplexityProfile("subword", 4, (2, 3, 1, 1))
        with pytest.raises(InvariantViolation):
            trapezoid_shape(fake)

    @given(words)
    def test_always_segments(self, w):
        shape = trapezoid_shape(subword_complexity_profile(w))
        assert 0 <= shape.J <= shape.M <= len(w)

    @pytest.mark.parametrize("values,expected", [
        ([1, 2, 3, 2, 1], True),
        ([1, 1, 1], True),
        ([1, 2, 3, 1], False),
        ([2, 3, 1, 2, 1], False),
    ])
    def test_is_trapezoidal(self, values, expected):
        assert is_trapezoidal(values) is expected


class TestPalindromeProfile:
    def test_first_example_odd_projection(self):
        odd, _ = odd_even_projection(palindrome_profile_eertree(W(W1)))
        assert len(W1) == 19
        assert [odd[k] for k in (1, 3, 5, 7, 9)] == [2, 3, 1, 2, 1]
        assert all(odd[k] == 0 for k in odd if k >= 11)

    def test_second_example_even_projection(self):
        _, even = odd_even_projection(palindrome_profile_eertree(W(W2)))
        assert len(W2) == 22
        assert [even[k] for k in (2, 4, 6, 8, 10)] == [2, 3, 1, 2, 1]

    def test_projections_not_monotone_or_trapezoidal(self):
        odd, _ = odd_even_projection(palindrome_profile_eertree(W(W1)))
        _, even = odd_even_projection(palindrome_profile_eertree(W(W2)))
        for seq in ([odd[k] for k in (1, 3, 5, 7, 9)], [even[k] for k in (2, 4, 6, 8, 10)]):
            assert any(b < a for a, b in zip(seq, seq[1:]))
            assert any(b > a for a, b in zip(seq, seq[1:]))
            assert not is_trapezoidal([0] + seq)

    def test_single_letter(self):
        odd, even = odd_even_projection(palindrome_profile_eertree(W("0")))
        assert list(odd.values()) == [1] and even == {}

    def test_unary(self):
        assert palindrome_profile_eertree(W("0000")).as_list() == [1, 1, 1, 1]

    def test_projection_rejects_subword_profile(self):
        with pytest.raises(ValueError):
            odd_even_projection(subword_complexity_profile(W("01")))

    @pytest.mark.parametrize("truncate", [30, 45, 60])
    def test_continued_first_example(self, truncate):
        w = W((W1 + "1100" * 20)[:truncate])
        odd, _ = odd_even_projection(palindrome_profile_eertree(w))
        assert [odd[k] for k in (1, 3, 5, 7, 9)] == [2, 3, 1, 2, 1]
        assert all(odd[k] == 0 for k in odd if k >= 11)

    @pytest.mark.parametrize("truncate", [30, 45, 60])
    def test_continued_second_example(self, truncate):
        w = W((W2 + "10" * 30)[:truncate])
        _, even = odd_even_projection(palindrome_profile_eertree(w))
        assert [even[k] for k in (2, 4, 6, 8, 10)] == [2, 3, 1, 2, 1]
        assert all(even[k] == 0 for k in even if k >= 12)


class TestPalindromeValence:
    def test_unary_three(self):
        t = palindrome_valence_table(W("000"))
        assert t.s(1, 1) == 1

    def test_centre_one(self):
        t = palindrome_valence_table(W("010"))
        # "1" extends to "010"; "0" has no x with x0x a factor
        assert t.s(1, 1) == 1 and t.s(0, 1) == 1

    @given(words)
    def test_matches_enumeration(self, w):
        assert list(palindrome_valence_table(w).rows) == naive_palindrome_valence(w)

    def test_random_rows_sum_to_profile(self, rng):
        for _ in range(1000):
            w = random_word(rng, rng.choice((2, 3, 5)), rng.randint(1, 60))
            t = palindrome_valence_table(w)
            assert t.totals() == palindrome_profile_eertree(w).as_list()


class TestBounds:
    @pytest.mark.parametrize("text", [W1, W2, "0000"])
    def test_examples(self, text):
        assert check_complexity_bounds(W(text))

    @given(words)
    def test_random(self, w):
        assert check_complexity_bounds(w)


class TestEertree:
    @given(words)
    @settings(max_examples=300)
    def test_matches_naive_oracle(self, w):
        assert palindrome_profile_eertree(w) == palindrome_profile_naive(w)
        tree = PalindromicTree(w.q, w.symbols)
        assert {Word(p, w.q) for p in tree.palindromes()} == palindromic_factors(w)

    @given(words)
    def test_size_at_most_length(self, w):
        assert len(PalindromicTree(w.q, w.symbols)) <= len(w)

    @given(words)
    def test_mirror_symmetry(self, w):
        r = reverse(w)
        assert palindrome_profile_eertree(r) == palindrome_profile_eertree(w)
        assert subword_complexity_profile(r) == subword_complexity_profile(w)

    def test_append_reports_new_palindromes(self):
        tree = PalindromicTree(2)
        assert [tree.append(c) for c in (0, 1, 1, 0)] == [True] * 4
        # shortest binary word with fewer palindromes than letters
        tree = PalindromicTree(2)
        flags = [tree.append(c) for c in W("00101100").symbols]
        assert flags.count(False) == 1 and len(tree) == 7

    def test_rejects_out_of_range_symbol(self):
        with pytest.raises(ValueError):
            PalindromicTree(2).append(2)

    def test_long_random_words(self):
        r = random.Random(5)
        for q in (2, 3, 4):
            for _ in range(5):
                w = random_word(r, q, 500)
                assert palindrome_profile_eertree(w) == palindrome_profile_naive(w)
