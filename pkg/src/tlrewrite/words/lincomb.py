"""
Linear combinations of words and the evaluation morphism onto diagrams.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import cache

from pydantic import BaseModel, ConfigDict, field_validator

from tlrewrite.errors import DimensionMismatch, InvalidWord
from tlrewrite.laurent import LaurentInt, parse_laurent
from tlrewrite.planar import (
    Diagram,
    ScaledDiagram,
    compose,
    generator,
    identity,
)
from tlrewrite.words.word import DELTA, Word, check_word, format_word, parse_word


class LinComb(BaseModel):
    """Finite mapping Word -> LaurentInt for a fixed ambient n."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    terms: dict[Word, LaurentInt] = {}

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, terms: dict[Word, LaurentInt]) -> dict[Word, LaurentInt]:
        return {word: coeff for word, coeff in terms.items() if coeff}

    @classmethod
    def of(cls, n: int, terms: Mapping[Word, LaurentInt | int]) -> LinComb:
        """Checked constructor; merges nothing, keys must be distinct words."""
        checked = {check_word(w, n): LaurentInt(c) for w, c in terms.items()}
        return cls(n=n, terms=checked)

    @classmethod
    def monomial(cls, n: int, word: Word, coeff: LaurentInt | int = 1) -> LinComb:
        return cls.of(n, {word: coeff})

    @classmethod
    def unit(cls, n: int) -> LinComb:
        return cls.monomial(n, ())

    def __add__(self, other: LinComb) -> LinComb:
        _same_n(self, other)
        merged = dict(self.terms)
        for word, coeff in other.terms.items():
            merged[word] = merged.get(word, LaurentInt()) + coeff
        return LinComb(n=self.n, terms=merged)

    def __bool__(self) -> bool:
        return bool(self.terms)


def _same_n(a: LinComb, b: LinComb) -> None:
    if a.n != b.n:
        msg = f"ambient n differs: {a.n} vs {b.n}"
        raise DimensionMismatch(msg)


def multiply(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear extension of concatenation; no rewriting happens here."""
    _same_n(a, b)
    product: dict[Word, LaurentInt] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            word = u + v
            product[word] = product.get(word, LaurentInt()) + cu * cv
    return LinComb(n=a.n, terms=product)


@cache
def _generator(n: int, i: int) -> Diagram:
    return generator(n, i)


def evaluate(word: Word, n: int) -> ScaledDiagram:
    """The morphism φ on a monomial."""
    letters = check_word(word, n)
    result = ScaledDiagram(0, identity(n))
    for letter in letters:
        if letter == DELTA:
            result = ScaledDiagram(result.power + 1, result.diagram)
        else:
            result = compose(result, _generator(n, letter))
    return result


def evaluate_lincomb(x: LinComb) -> dict[Diagram, LaurentInt]:
    """φ on a combination; δ powers are folded into the coefficients."""
    images: dict[Diagram, LaurentInt] = {}
    for word, coeff in x.terms.items():
        image = evaluate(word, x.n)
        images[image.diagram] = images.get(image.diagram, LaurentInt()) + (
            coeff.shift(image.power)
        )
    return {d: c for d, c in images.items() if c}


# -- text ---------------------------------------------------------------------


def split_top_level(text: str, separator: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for index, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                msg = f"unbalanced ')' at column {index}"
                raise InvalidWord(msg)
        elif char == separator and depth == 0:
            parts.append(text[start:index])
            start = index + 1
    if depth:
        msg = "unbalanced '(' in combination"
        raise InvalidWord(msg)
    parts.append(text[start:])
    return parts


def parse_lincomb(text: str, n: int, var: str = "d") -> LinComb:
    """``(2d^2-1)*e1 e2 + 3*1 + e2`` (a bare word has coefficient 1)."""
    if text.strip() == "0":
        return LinComb(n=n)
    total = LinComb(n=n)
    for position, chunk in enumerate(split_top_level(text, "+")):
        if not chunk.strip():
            msg = f"term {position} is empty"
            raise InvalidWord(msg)
        pieces = split_top_level(chunk, "*")
        if len(pieces) == 1:
            coeff, word_text = LaurentInt(1), pieces[0]
        elif len(pieces) == 2:  # noqa: PLR2004
            coeff, word_text = parse_laurent(pieces[0], var), pieces[1]
        else:
            msg = f"term {position} ({chunk.strip()!r}): parenthesize the coefficient"
            raise InvalidWord(msg)
        total += LinComb.monomial(n, parse_word(word_text, n), coeff)
    return total


def format_lincomb(x: LinComb, var: str = "d") -> str:
    if not x.terms:
        return "0"
    ordered = sorted(x.terms, key=lambda w: (len(w), w))
    return " + ".join(
        f"({x.terms[w].format(var)})*{format_word(w) or '1'}" for w in ordered
    )


def lincomb_records(x: LinComb, var: str = "d") -> list[dict[str, str]]:
    """``--json`` shape: one {word, coefficient} record per term."""
    ordered = sorted(x.terms, key=lambda w: (len(w), w))
    return [
        {"word": format_word(w), "coefficient": x.terms[w].format(var)}
        for w in ordered
    ]
