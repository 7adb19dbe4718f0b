"""
Objects and generating arrows of the monoidal TL category.

Objects are words: over ``v``/``^`` (∨/∧) in oriented mode, over ``o`` in
plain mode where the word ``ooo`` stands for the object 3.
"""

from __future__ import annotations

from enum import Enum

from tlrewrite.errors import InvalidTerm

DOWN, UP, POINT = "v", "^", "o"
UNIT = "∅"


class Mode(str, Enum):
    """Which flavour of the category an object or term belongs to."""

    ORIENTED = "oriented"  # objects over {v, ^}, loops -> q^±1
    PLAIN = "plain"  # objects are integers, loops -> δ


class GenArrow(str, Enum):
    """Generating arrows with their fixed domain and codomain."""

    CAP_PLUS = "cap+"  # v^ -> ∅
    CAP_MINUS = "cap-"  # ^v -> ∅
    CUP_PLUS = "cup+"  # ∅ -> v^
    CUP_MINUS = "cup-"  # ∅ -> ^v
    CAP = "cap"  # 2 -> 0
    CUP = "cup"  # 0 -> 2

    @property
    def dom(self) -> str:
        return _DOM[self]

    @property
    def cod(self) -> str:
        return _COD[self]

    @property
    def is_cap(self) -> bool:
        return len(self.dom) == 2  # noqa: PLR2004

    @property
    def mode(self) -> Mode:
        return Mode.PLAIN if self in {GenArrow.CAP, GenArrow.CUP} else Mode.ORIENTED

    @property
    def rank(self) -> int:
        """Position in declaration order, used for canonical slice orders."""
        return list(GenArrow).index(self)


_DOM = {
    GenArrow.CAP_PLUS: DOWN + UP,
    GenArrow.CAP_MINUS: UP + DOWN,
    GenArrow.CUP_PLUS: "",
    GenArrow.CUP_MINUS: "",
    GenArrow.CAP: POINT * 2,
    GenArrow.CUP: "",
}
_COD = {
    GenArrow.CAP_PLUS: "",
    GenArrow.CAP_MINUS: "",
    GenArrow.CUP_PLUS: DOWN + UP,
    GenArrow.CUP_MINUS: UP + DOWN,
    GenArrow.CAP: "",
    GenArrow.CUP: POINT * 2,
}


def cap_for(pair: str) -> GenArrow | None:
    """The cap consuming the two symbols ``pair``, if one exists."""
    return {
        DOWN + UP: GenArrow.CAP_PLUS,
        UP + DOWN: GenArrow.CAP_MINUS,
        POINT * 2: GenArrow.CAP,
    }.get(pair)


def cup_for(pair: str) -> GenArrow | None:
    """The cup producing the two symbols ``pair``, if one exists."""
    return {
        DOWN + UP: GenArrow.CUP_PLUS,
        UP + DOWN: GenArrow.CUP_MINUS,
        POINT * 2: GenArrow.CUP,
    }.get(pair)


def plain_object(n: int) -> str:
    if n < 0:
        msg = f"object size must be >= 0, got {n}"
        raise InvalidTerm(msg)
    return POINT * n


def parse_object(text: str, mode: Mode) -> str:
    """``v^v`` (oriented), ``3`` (plain); ``∅``, ``0`` or nothing is the unit."""
    body = text.strip()
    if body in {"", UNIT, "0"}:
        return ""
    if mode is Mode.PLAIN:
        if not body.isdigit():
            msg = f"plain object must be a nonnegative integer, got {text!r}"
            raise InvalidTerm(msg)
        return plain_object(int(body))
    for position, symbol in enumerate(body):
        if symbol not in {DOWN, UP}:
            msg = f"object {text!r}, symbol {position}: expected 'v' or '^', got {symbol!r}"
            raise InvalidTerm(msg)
    return body


def format_object(obj: str, mode: Mode | None = None) -> str:
    if not obj:
        return "0" if mode is Mode.PLAIN else UNIT
    if set(obj) == {POINT}:
        return str(len(obj))
    return obj
