"""
Exact integer Laurent polynomials in one formal variable.

The variable is anonymous inside the value; it is named only when parsing or
printing (``d`` for the loop parameter δ, ``q`` in the oriented setting).
Arithmetic is delegated to sympy and every result is expanded and re-checked
to have integer coefficients.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from tokenize import TokenError

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from tlrewrite.errors import InvalidCoefficient

_X = sp.Symbol("x")
_TRANSFORMS = (
    *standard_transformations,
    implicit_multiplication_application,
    convert_xor,
)
_VAR_NAME = re.compile(r"[A-Za-z]")


def _exponent_map(expr: sp.Expr) -> dict[int, int]:
    terms: dict[int, int] = {}
    if expr == 0:
        return terms
    for term in expr.as_ordered_terms():
        coeff, exponent = term.as_coeff_exponent(_X)
        if not (coeff.is_Integer and sp.sympify(exponent).is_Integer):
            msg = f"not an integer Laurent monomial: {term}"
            raise InvalidCoefficient(msg)
        key = int(exponent)
        terms[key] = terms.get(key, 0) + int(coeff)
    return {e: c for e, c in terms.items() if c}


class LaurentInt:
    """Element of Z[x, 1/x]; zero coefficients are never stored."""

    __slots__ = ("_expr", "_terms")

    def __init__(self, value: int | sp.Expr | LaurentInt = 0) -> None:
        if isinstance(value, LaurentInt):
            self._expr, self._terms = value._expr, value._terms
            return
        expr = sp.sympify(value)
        if not isinstance(expr, sp.Expr):
            msg = f"not a Laurent polynomial: {value!r}"
            raise InvalidCoefficient(msg)
        expr = sp.expand(expr)
        self._terms = _exponent_map(expr)
        self._expr = expr

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentInt:
        return cls(coefficient * _X**exponent)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentInt:
        return cls(sp.Add(*(c * _X**e for e, c in terms.items())))

    # -- inspection -----------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """Exponent -> nonzero coefficient."""
        return dict(self._terms)

    def evaluate(self, value: int | str | sp.Rational) -> sp.Rational:
        """Substitute an exact rational for the variable."""
        point = sp.Rational(value)
        if point == 0 and any(e < 0 for e in self._terms):
            msg = "cannot evaluate a negative power at 0"
            raise InvalidCoefficient(msg)
        return sp.Rational(self._expr.subs(_X, point))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: LaurentInt | int) -> LaurentInt:
        return LaurentInt(self._expr + _coerce(other)._expr)

    __radd__ = __add__

    def __sub__(self, other: LaurentInt | int) -> LaurentInt:
        return LaurentInt(self._expr - _coerce(other)._expr)

    def __rsub__(self, other: LaurentInt | int) -> LaurentInt:
        return LaurentInt(_coerce(other)._expr - self._expr)

    def __mul__(self, other: LaurentInt | int) -> LaurentInt:
        return LaurentInt(self._expr * _coerce(other)._expr)

    __rmul__ = __mul__

    def __neg__(self) -> LaurentInt:
        return LaurentInt(-self._expr)

    def shift(self, exponent: int) -> LaurentInt:
        """Multiply by x**exponent."""
        if not exponent:
            return self
        return LaurentInt(self._expr * _X**exponent)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentInt(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- text -----------------------------------------------------------------

    def format(self, var: str = "d") -> str:
        """Render with ascending exponents, e.g. ``2q^-1 + 1``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exponent in sorted(self._terms):
            coeff = self._terms[exponent]
            magnitude = abs(coeff)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = var if exponent == 1 else f"{var}^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentInt({self.format('x')!r})"


def _coerce(value: LaurentInt | int) -> LaurentInt:
    return value if isinstance(value, LaurentInt) else LaurentInt(value)


def parse_laurent(text: str, var: str = "d") -> LaurentInt:
    """Parse ``(2d^2-1)``, ``-3``, ``q^-1 + 2`` ... into a LaurentInt."""
    body = text.strip()
    allowed = set(f"0123456789+-*^() {var}")
    stray = sorted({ch for ch in body if ch not in allowed})
    if not body or stray:
        msg = f"bad coefficient {text!r}" + (
            f": unexpected {''.join(stray)!r}" if stray else ""
        )
        raise InvalidCoefficient(msg)
    if not _VAR_NAME.fullmatch(var):
        msg = f"variable name must be a single letter, got {var!r}"
        raise InvalidCoefficient(msg)
    try:
        expr = parse_expr(body, local_dict={var: _X}, transformations=_TRANSFORMS)
    except (SyntaxError, TokenError, TypeError, sp.SympifyError) as exc:
        msg = f"bad coefficient {text!r}: {exc}"
        raise InvalidCoefficient(msg) from exc
    if not isinstance(expr, sp.Expr):
        msg = f"bad coefficient {text!r}: not a polynomial expression"
        raise InvalidCoefficient(msg)
    return LaurentInt(expr)


ONE = LaurentInt(1)
ZERO = LaurentInt(0)
