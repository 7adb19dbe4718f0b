"""
Unit tests for exact Laurent polynomial coefficients.
"""

import pytest
import sympy as sp

from tlrewrite.errors import InvalidCoefficient
from tlrewrite.laurent import ONE, ZERO, LaurentInt, parse_laurent


class TestArithmetic:
    """Ring operations on LaurentInt."""

    def test_monomial_terms(self):
        assert LaurentInt.monomial(-2, 3).terms() == {-2: 3}

    def test_add_cancels(self):
        x = LaurentInt.monomial(1)
        assert (x - x) == ZERO
        assert not (x - x)

    def test_multiply_inverse_powers(self):
        assert LaurentInt.monomial(2) * LaurentInt.monomial(-2) == ONE

    def test_int_coercion(self):
        assert LaurentInt.monomial(0) + 2 == 3
        assert 2 * LaurentInt.monomial(1) == LaurentInt.monomial(1, 2)

    def test_shift(self):
        value = LaurentInt.from_terms({0: 1, 1: -1})
        assert value.shift(2).terms() == {2: 1, 3: -1}

    def test_rejects_non_expression(self):
        with pytest.raises(InvalidCoefficient, match="not a Laurent"):
            LaurentInt(sp.Tuple())

    def test_hashable(self):
        assert len({LaurentInt(1), ONE, LaurentInt.monomial(0)}) == 1


class TestTextForm:
    """parse_laurent and format."""

    def test_parse_parenthesized(self):
        assert parse_laurent("(2d^2-1)").terms() == {0: -1, 2: 2}

    def test_parse_negative_power_in_q(self):
        assert parse_laurent("q^-1 + 2", "q").terms() == {-1: 1, 0: 2}

    def test_format_ascending(self):
        assert parse_laurent("1 + 2q^-1", "q").format("q") == "2q^-1 + 1"

    def test_format_negative_leading(self):
        assert LaurentInt.from_terms({0: -1, 2: 2}).format("d") == "-1 + 2d^2"

    def test_format_zero(self):
        assert ZERO.format() == "0"

    def test_format_parses_back(self):
        value = LaurentInt.from_terms({-3: 4, 1: -1, 5: 1})
        assert parse_laurent(value.format("q"), "q") == value

    @pytest.mark.parametrize("text", ["", "2x", "d/0.5", "(d"])
    def test_rejects_bad_text(self, text):
        with pytest.raises(InvalidCoefficient):
            parse_laurent(text)

    def test_rejects_fraction(self):
        with pytest.raises(InvalidCoefficient, match="integer"):
            parse_laurent("(d+1)^-1")

    def test_rejects_empty_parentheses(self):
        with pytest.raises(InvalidCoefficient, match="not a polynomial"):
            parse_laurent("()")


class TestEvaluate:
    """Exact substitution."""

    def test_rational_point(self):
        assert parse_laurent("d^2 - 1").evaluate(2) == 3

    def test_negative_power_at_zero(self):
        with pytest.raises(InvalidCoefficient, match="negative power"):
            parse_laurent("d^-1").evaluate(0)

    def test_half(self):
        assert parse_laurent("d^-1").evaluate("1/2") == sp.Rational(2)
