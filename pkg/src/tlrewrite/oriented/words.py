"""
Framed words of TLO_{n,k}(q) and their linear combinations.

A monomial is a token tuple: frames (orientation words, ``str``) and
generator indices (``int``), starting and ending with a frame and never with
two generators side by side. ``("v^", 1, "^v")`` is 1_{v^} e_1 1_{^v}.
Powers of q are kept in the coefficients, never in the tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from pydantic import BaseModel, ConfigDict, field_validator

from tlrewrite.category import MTerm, ONet, Slice, cap_for, cup_for, eval_net
from tlrewrite.errors import InvalidCoefficient, InvalidOrientation, InvalidWord
from tlrewrite.laurent import LaurentInt, parse_laurent
from tlrewrite.oriented.cosets import check_orientation, check_sizes, orientations
from tlrewrite.words import split_top_level

Token = str | int
Tokens = tuple[Token, ...]

_FRAME = re.compile(r"1\[([v^]*)\]")
_GEN = re.compile(r"e(\d+)")


def layer_consistent(before: str, i: int, after: str) -> bool:
    """1_before e_i 1_after is nonzero: after is before or before·s_i, with a jump at i."""
    pair, other = before[i - 1 : i + 1], after[i - 1 : i + 1]
    return (
        pair[0] != pair[1]
        and other[0] != other[1]
        and before[: i - 1] == after[: i - 1]
        and before[i + 1 :] == after[i + 1 :]
    )


def _layer(before: str, i: int, after: str) -> tuple[Slice, Slice] | None:
    cap = cap_for(before[i - 1 : i + 1])
    cup = cup_for(after[i - 1 : i + 1])
    if cap is None or cup is None:
        return None
    down = Slice.at(before, i - 1, cap)
    if down.cod != after[: i - 1] + after[i + 1 :]:
        return None
    return down, Slice.at(down.cod, i - 1, cup)


def framed_term(frames: tuple[str, ...], gens: tuple[int, ...]) -> MTerm | None:
    """Term of 1_{λ0} e_{i1} 1_{λ1} ..; None when some layer does not type."""
    if len(frames) != len(gens) + 1:
        msg = f"{len(gens)} generators need {len(gens) + 1} frames, got {len(frames)}"
        raise InvalidWord(msg)
    slices: list[Slice] = []
    for before, i, after in zip(frames, gens, frames[1:], strict=False):
        layer = _layer(before, i, after)
        if layer is None:
            return None
        slices.extend(layer)
    return MTerm(frames[0], tuple(slices))


@dataclass(frozen=True, slots=True)
class OrientedWord:
    """q^qexp · 1_{λ0} e_{i1} 1_{λ1} .. e_{ir} 1_{λr}."""

    qexp: int
    frames: tuple[str, ...]
    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.frames) != len(self.gens) + 1:
            msg = f"{len(self.gens)} generators need {len(self.gens) + 1} frames"
            raise InvalidWord(msg)

    @classmethod
    def from_tokens(cls, tokens: Tokens, qexp: int = 0) -> OrientedWord:
        """Alternating frame/generator tokens; adjacent frames are rejected."""
        frames, gens = tokens[0::2], tokens[1::2]
        if not all(isinstance(f, str) for f in frames) or not all(
            isinstance(g, int) for g in gens
        ):
            msg = f"tokens {format_tokens(tokens)!r} do not alternate frame/generator"
            raise InvalidWord(msg)
        return cls(qexp, tuple(frames), tuple(gens))  # type: ignore[arg-type]

    def tokens(self) -> Tokens:
        out: list[Token] = [self.frames[0]]
        for i, frame in zip(self.gens, self.frames[1:], strict=True):
            out.extend((i, frame))
        return tuple(out)

    def value(self) -> ONet | None:
        """The scaled oriented net, or None for zero."""
        term = framed_term(self.frames, self.gens)
        if term is None:
            return None
        net = eval_net(term)
        return ONet(net.bottom, net.top, net.match, net.scalar_exp + self.qexp)


def tokens_value(tokens: Tokens) -> ONet | None:
    """Net of any token sequence; two different adjacent frames give zero."""
    merged: list[Token] = []
    for token in tokens:
        if merged and isinstance(token, str) and isinstance(merged[-1], str):
            if token != merged[-1]:
                return None
            continue
        merged.append(token)
    return OrientedWord.from_tokens(tuple(merged)).value()


# -- linear combinations --------------------------------------------------------


class OrientedLinComb(BaseModel):
    """Token tuple -> Laurent coefficient in q; no terms is Zero."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    k: int
    terms: dict[Tokens, LaurentInt] = {}

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, terms: dict[Tokens, LaurentInt]) -> dict[Tokens, LaurentInt]:
        return {tokens: coeff for tokens, coeff in terms.items() if coeff}

    @classmethod
    def monomial(
        cls, n: int, k: int, tokens: Tokens, coeff: LaurentInt | int = 1
    ) -> OrientedLinComb:
        return cls(n=n, k=k, terms={check_tokens(tokens, n, k): LaurentInt(coeff)})

    def __add__(self, other: OrientedLinComb) -> OrientedLinComb:
        if (self.n, self.k) != (other.n, other.k):
            msg = f"sectors differ: n={self.n},k={self.k} vs n={other.n},k={other.k}"
            raise InvalidOrientation(msg)
        merged = dict(self.terms)
        for tokens, coeff in other.terms.items():
            merged[tokens] = merged.get(tokens, LaurentInt()) + coeff
        return OrientedLinComb(n=self.n, k=self.k, terms=merged)

    def __bool__(self) -> bool:
        return bool(self.terms)


def check_tokens(tokens: Tokens, n: int, k: int) -> Tokens:
    if not tokens or not isinstance(tokens[0], str) or not isinstance(tokens[-1], str):
        msg = f"monomial {format_tokens(tokens)!r} must start and end with a frame"
        raise InvalidWord(msg)
    previous: Token | None = None
    for position, token in enumerate(tokens):
        if isinstance(token, str):
            check_orientation(token, n, k)
        else:
            if not 1 <= token <= n - 1:
                msg = f"token {position}: e{token} out of range for n={n}"
                raise InvalidWord(msg)
            if isinstance(previous, int):
                msg = f"token {position}: generators must be separated by a frame"
                raise InvalidWord(msg)
        previous = token
    return tuple(tokens)


def format_tokens(tokens: Tokens) -> str:
    return " ".join(f"1[{t}]" if isinstance(t, str) else f"e{t}" for t in tokens)


def token_key(tokens: Tokens) -> tuple[int, str]:
    return (len(tokens), format_tokens(tokens))


def format_oriented(x: OrientedLinComb) -> str:
    if not x.terms:
        return "0"
    return " + ".join(
        f"({x.terms[t].format('q')})*{format_tokens(t)}"
        for t in sorted(x.terms, key=token_key)
    )


def oriented_records(x: OrientedLinComb) -> list[dict[str, str]]:
    return [
        {"word": format_tokens(t), "coefficient": x.terms[t].format("q")}
        for t in sorted(x.terms, key=token_key)
    ]


def _parse_monomial(text: str, n: int, k: int) -> list[Tokens]:
    """Tokens of one monomial with every missing frame expanded over W_k."""
    slots: list[list[Token]] = []
    for position, piece in enumerate(text.split()):
        if piece == "1":
            continue
        if found := _FRAME.fullmatch(piece):
            frame = check_orientation(found.group(1), n, k)
            slots.append([frame])
        elif found := _GEN.fullmatch(piece):
            index = int(found.group(1))
            if not 1 <= index <= n - 1:
                msg = f"token {position} ({piece!r}): e{index} out of range for n={n}"
                raise InvalidWord(msg)
            if not slots or isinstance(slots[-1][0], int):
                slots.append(list(orientations(n, k)))
            slots.append([index])
        else:
            msg = f"token {position} ({piece!r}): expected '1[<v/^ word>]' or 'e<INT>'"
            raise InvalidWord(msg)
    if not slots or isinstance(slots[-1][0], int):
        slots.append(list(orientations(n, k)))
    return [tuple(choice) for choice in product(*slots)]


def parse_oriented(text: str, n: int, k: int) -> OrientedLinComb:
    """``(q^-1)*1[v^] e1 1[^v] + e1``; a missing frame means the sum over W_k."""
    check_sizes(n, k)
    total = OrientedLinComb(n=n, k=k)
    if text.strip() == "0":
        return total
    for position, chunk in enumerate(split_top_level(text, "+")):
        if not chunk.strip():
            msg = f"term {position} is empty"
            raise InvalidWord(msg)
        pieces = split_top_level(chunk, "*")
        if len(pieces) == 1:
            coeff, body = LaurentInt(1), pieces[0]
        elif len(pieces) == 2:  # noqa: PLR2004
            coeff, body = parse_laurent(pieces[0], "q"), pieces[1]
        else:
            msg = f"term {position} ({chunk.strip()!r}): parenthesize the coefficient"
            raise InvalidCoefficient(msg)
        for tokens in _parse_monomial(body, n, k):
            total += OrientedLinComb(n=n, k=k, terms={tokens: coeff})
    return total
