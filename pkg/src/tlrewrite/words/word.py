"""
Words over the alphabet {δ, e_1, ..., e_{n-1}}.

A letter is an int: ``DELTA == 0`` and ``i >= 1`` stands for e_i, so the
natural order of ints is the alphabet order δ < e_1 < e_2 < ... used by
shortlex.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from tlrewrite.errors import InvalidWord

Letter = int
Word = tuple[int, ...]

DELTA: Letter = 0

_GEN = re.compile(r"e(\d+)")


def check_word(word: Iterable[Letter], n: int) -> Word:
    """Return ``word`` as a tuple after checking letters against n."""
    letters = tuple(word)
    for position, letter in enumerate(letters):
        if letter != DELTA and not 1 <= letter <= n - 1:
            msg = (
                f"letter {position}: e{letter} out of range for n={n} "
                f"(valid e1..e{n - 1})"
            )
            raise InvalidWord(msg)
    return letters


def parse_word(text: str, n: int | None = None) -> Word:
    """``"d e1 e2"`` -> ``(0, 1, 2)``; ``"1"`` alone is the empty word."""
    tokens = text.split()
    if tokens == ["1"]:
        return ()
    letters: list[Letter] = []
    for position, token in enumerate(tokens):
        if token in {"d", "δ"}:
            letters.append(DELTA)
            continue
        found = _GEN.fullmatch(token)
        if found is None or int(found.group(1)) == 0:
            msg = f"token {position} ({token!r}): expected 'd' or 'e<INT>' with INT >= 1"
            raise InvalidWord(msg)
        letters.append(int(found.group(1)))
    word = tuple(letters)
    return word if n is None else check_word(word, n)


def format_word(word: Iterable[Letter]) -> str:
    return " ".join("d" if letter == DELTA else f"e{letter}" for letter in word)


def shortlex_key(word: Word) -> tuple[int, Word]:
    """Shorter words first, then lexicographic with δ smallest."""
    return (len(word), word)


def delta_count(word: Word) -> int:
    return word.count(DELTA)


def strip_delta(word: Word) -> Word:
    return tuple(letter for letter in word if letter != DELTA)
