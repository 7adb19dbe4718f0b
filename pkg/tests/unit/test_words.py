"""
Unit tests for words, linear combinations and evaluation.
"""

import random

import pytest

from tlrewrite.errors import DimensionMismatch, InvalidCoefficient, InvalidWord
from tlrewrite.laurent import LaurentInt
from tlrewrite.planar import compose, generator, identity, multiply_combinations
from tlrewrite.words import (
    DELTA,
    LinComb,
    check_word,
    delta_count,
    evaluate,
    evaluate_lincomb,
    format_lincomb,
    format_word,
    lincomb_records,
    multiply,
    parse_lincomb,
    parse_word,
    shortlex_key,
    split_top_level,
    strip_delta,
)


def random_word(rng: random.Random, n: int, length: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, n - 1) for _ in range(length))


def random_lincomb(rng: random.Random, n: int) -> LinComb:
    terms = {
        random_word(rng, n, rng.randint(0, 4)): LaurentInt.monomial(
            rng.randint(-2, 2), rng.choice([-2, -1, 1, 3])
        )
        for _ in range(3)
    }
    return LinComb.of(n, terms)


class TestWord:
    """Word grammar and helpers."""

    def test_parse(self):
        assert parse_word("d e1 e12") == (DELTA, 1, 12)

    def test_unicode_delta(self):
        assert parse_word("δ e2") == (DELTA, 2)

    def test_one_is_empty(self):
        assert parse_word("1") == ()
        assert parse_word("") == ()

    def test_format(self):
        assert format_word((DELTA, 3, 1)) == "d e3 e1"

    def test_bad_token_position(self):
        with pytest.raises(InvalidWord, match=r"token 1 \('x2'\)"):
            parse_word("e1 x2")

    def test_e0_rejected(self):
        with pytest.raises(InvalidWord, match="INT >= 1"):
            parse_word("e0")

    def test_index_out_of_range(self):
        with pytest.raises(InvalidWord, match="e9 out of range for n=4"):
            parse_word("e9", 4)

    def test_check_word_accepts_delta(self):
        assert check_word([0, 1, 0], 2) == (0, 1, 0)

    def test_shortlex_key_orders(self):
        words = [(2,), (1, 1), (1,), (), (DELTA,)]
        assert sorted(words, key=shortlex_key) == [(), (DELTA,), (1,), (2,), (1, 1)]

    def test_delta_helpers(self):
        word = (DELTA, 2, DELTA, 1)
        assert delta_count(word) == 2
        assert strip_delta(word) == (2, 1)


class TestLinComb:
    """Parsing, printing and arithmetic of combinations."""

    def test_parse_and_format(self):
        x = parse_lincomb("(2d^2-1)*e1 e2 + 3*1 + e2", 3)
        assert x.terms[(1, 2)] == LaurentInt.from_terms({0: -1, 2: 2})
        assert x.terms[()] == 3
        assert format_lincomb(x) == "(3)*1 + (1)*e2 + (-1 + 2d^2)*e1 e2"

    def test_format_parses_back(self):
        x = parse_lincomb("(d^-1)*e2 e1 + (1 - d)*e1", 3)
        assert parse_lincomb(format_lincomb(x), 3) == x

    def test_like_terms_merge(self):
        x = parse_lincomb("e1 + (d)*e1 + (-1)*e1", 2)
        assert x.terms == {(1,): LaurentInt.monomial(1)}

    def test_zero(self):
        assert not parse_lincomb("0", 2)
        assert format_lincomb(LinComb(n=2)) == "0"

    def test_records(self):
        x = parse_lincomb("(2)*e1 + 1", 2)
        assert lincomb_records(x) == [
            {"word": "", "coefficient": "1"},
            {"word": "e1", "coefficient": "2"},
        ]

    def test_empty_term(self):
        with pytest.raises(InvalidWord, match="term 1 is empty"):
            parse_lincomb("e1 + ", 2)

    def test_unparenthesized_product(self):
        with pytest.raises(InvalidWord, match="parenthesize"):
            parse_lincomb("2*d*e1", 2)

    def test_bad_coefficient(self):
        with pytest.raises(InvalidCoefficient):
            parse_lincomb("(2x)*e1", 2)

    def test_unbalanced(self):
        with pytest.raises(InvalidWord, match="unbalanced"):
            split_top_level("(d+1))*e1", "*")

    def test_multiply_concatenates(self):
        a = parse_lincomb("e1 + (d)*1", 3)
        b = parse_lincomb("e2", 3)
        assert multiply(a, b).terms == {
            (1, 2): LaurentInt(1),
            (2,): LaurentInt.monomial(1),
        }

    def test_mismatched_n(self):
        with pytest.raises(DimensionMismatch):
            LinComb.unit(2) + LinComb.unit(3)


class TestEvaluate:
    """The map from words to diagrams."""

    def test_empty_word_is_identity(self):
        image = evaluate((), 3)
        assert image.power == 0
        assert image.diagram == identity(3)

    def test_generator(self):
        assert evaluate((2,), 3).diagram == generator(3, 2)

    def test_delta_and_square(self):
        image = evaluate((DELTA, 1, 1), 2)
        assert image.power == 2
        assert image.diagram == generator(2, 1)

    def test_lincomb_folds_powers(self):
        x = parse_lincomb("e1 e1 + (-1)*d e1", 2)
        assert evaluate_lincomb(x) == {}

    def test_lincomb_collects_diagrams(self):
        x = parse_lincomb("e1 e2 e1 + e1", 3)
        assert evaluate_lincomb(x) == {generator(3, 1): LaurentInt(2)}


class TestRandomized:
    """Morphism and ring laws on random input."""

    @pytest.mark.parametrize("n", range(1, 7))
    def test_evaluate_is_a_monoid_morphism(self, n):
        rng = random.Random(11 * n)
        for _ in range(50):
            u = random_word(rng, n, rng.randint(0, 12))
            v = random_word(rng, n, rng.randint(0, 12))
            assert evaluate(u + v, n) == compose(evaluate(u, n), evaluate(v, n))

    @pytest.mark.parametrize("n", range(2, 5))
    def test_multiply_is_associative_with_unit(self, n):
        rng = random.Random(13 * n)
        for _ in range(20):
            x, y, z = (random_lincomb(rng, n) for _ in range(3))
            assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
            assert multiply(LinComb.unit(n), x) == x
            assert multiply(x, LinComb.unit(n)) == x

    @pytest.mark.parametrize("n", range(2, 6))
    def test_evaluation_respects_products(self, n):
        rng = random.Random(17 * n)
        for _ in range(20):
            x, y = random_lincomb(rng, n), random_lincomb(rng, n)
            assert evaluate_lincomb(multiply(x, y)) == multiply_combinations(
                evaluate_lincomb(x), evaluate_lincomb(y)
            )

    @pytest.mark.parametrize("n", range(2, 6))
    def test_text_forms_parse_back(self, n):
        rng = random.Random(19 * n)
        for _ in range(30):
            word = random_word(rng, n, rng.randint(0, 8))
            assert parse_word(format_word(word), n) == word
            x = random_lincomb(rng, n)
            assert parse_lincomb(format_lincomb(x), n) == x
