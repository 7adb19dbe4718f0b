"""
Typed slice terms: every arrow is a vertical stack of slices, each slice a
single generator padded with identities on both sides.

Terms are read bottom to top: ``slices[0]`` acts first on ``domain``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from tlrewrite.category.objects import (
    GenArrow,
    Mode,
    POINT,
    format_object,
    parse_object,
)
from tlrewrite.errors import InvalidTerm, TypeMismatch


@dataclass(frozen=True, slots=True)
class Slice:
    """``id_left ⊗ gen ⊗ id_right``."""

    left: str
    gen: GenArrow
    right: str

    @classmethod
    def at(cls, interface: str, position: int, gen: GenArrow) -> Slice:
        """The slice applying ``gen`` to ``interface`` at ``position``."""
        end = position + len(gen.dom)
        if not 0 <= position <= len(interface) - len(gen.dom):
            msg = f"{gen.value} at {position} does not fit {format_object(interface)}"
            raise TypeMismatch(msg)
        return cls(interface[:position], gen, interface[end:])

    @property
    def position(self) -> int:
        return len(self.left)

    @property
    def dom(self) -> str:
        return self.left + self.gen.dom + self.right

    @property
    def cod(self) -> str:
        return self.left + self.gen.cod + self.right


@dataclass(frozen=True, slots=True)
class MTerm:
    """An arrow ``domain -> ...`` given by its slices; no slices is the identity."""

    domain: str
    slices: tuple[Slice, ...] = ()

    @property
    def codomain(self) -> str:
        """Codomain as read off the last slice (meaningful once typed)."""
        return self.slices[-1].cod if self.slices else self.domain

    @property
    def mode(self) -> Mode:
        plain = POINT in self.domain or any(
            s.gen.mode is Mode.PLAIN for s in self.slices
        )
        return Mode.PLAIN if plain else Mode.ORIENTED

    def generator_count(self) -> int:
        return len(self.slices)

    def interfaces(self) -> list[str]:
        """domain, then the codomain of every slice in turn."""
        return [self.domain, *(s.cod for s in self.slices)]

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True, slots=True)
class TypeVerdict:
    ok: bool
    codomain: str | None = None
    index: int | None = None  # first slice that does not type
    message: str = ""


def typecheck(term: MTerm) -> TypeVerdict:
    """Accept iff every slice's domain is the previous codomain."""
    current = term.domain
    for index, piece in enumerate(term.slices):
        if piece.dom != current:
            return TypeVerdict(
                ok=False,
                index=index,
                message=(
                    f"slice {index} ({piece.gen.value}) expects "
                    f"{format_object(piece.dom)}, got {format_object(current)}"
                ),
            )
        current = piece.cod
    return TypeVerdict(ok=True, codomain=current)


def require_typed(term: MTerm) -> str:
    """Codomain of ``term``; TypeMismatch when it does not type."""
    verdict = typecheck(term)
    if not verdict.ok:
        raise TypeMismatch(verdict.message)
    return verdict.codomain or ""


def identity_term(obj: str) -> MTerm:
    return MTerm(obj)


def tensor(t1: MTerm, t2: MTerm) -> MTerm:
    """t1 ⊗ t2: run t1 beside the domain of t2, then t2 beside t1's codomain."""
    cod1 = require_typed(t1)
    require_typed(t2)
    slices = [Slice(s.left, s.gen, s.right + t2.domain) for s in t1.slices]
    slices.extend(Slice(cod1 + s.left, s.gen, s.right) for s in t2.slices)
    return MTerm(t1.domain + t2.domain, tuple(slices))


def compose_terms(t1: MTerm, t2: MTerm) -> MTerm:
    """t1 followed by t2."""
    cod1 = require_typed(t1)
    require_typed(t2)
    if cod1 != t2.domain:
        msg = (
            f"cannot compose: codomain {format_object(cod1)} "
            f"!= domain {format_object(t2.domain)}"
        )
        raise TypeMismatch(msg)
    return MTerm(t1.domain, t1.slices + t2.slices)


# -- text ---------------------------------------------------------------------

_SLICE = re.compile(r"\s*id\s*([^|;]*?)\s*\|\s*(\S+?)\s*\|\s*id\s*([^|;]*?)\s*")
_IDENTITY = re.compile(r"\s*id\s*([^|;]*?)\s*")


def parse_term(text: str, mode: Mode, domain: str) -> MTerm:
    """Parse ``id v|cup+|id ^; id ∅|cap-|id v^`` starting from ``domain``."""
    if not text.strip():
        return MTerm(domain)
    chunks = text.split(";")
    if len(chunks) == 1 and (found := _IDENTITY.fullmatch(chunks[0])):
        obj = parse_object(found.group(1), mode)
        if obj != domain:
            msg = (
                f"identity on {format_object(obj, mode)} "
                f"given domain {format_object(domain, mode)}"
            )
            raise TypeMismatch(msg)
        return MTerm(domain)
    slices: list[Slice] = []
    for index, chunk in enumerate(chunks):
        found = _SLICE.fullmatch(chunk)
        if found is None:
            msg = f"slice {index} ({chunk.strip()!r}): expected 'id OBJ|GEN|id OBJ'"
            raise InvalidTerm(msg)
        left, name, right = found.groups()
        try:
            gen = GenArrow(name)
        except ValueError as exc:
            choices = ", ".join(g.value for g in GenArrow if g.mode is mode)
            msg = f"slice {index}: unknown generator {name!r} (expected one of {choices})"
            raise InvalidTerm(msg) from exc
        if gen.mode is not mode:
            msg = f"slice {index}: {gen.value} is not a {mode.value} generator"
            raise InvalidTerm(msg)
        slices.append(Slice(parse_object(left, mode), gen, parse_object(right, mode)))
    term = MTerm(domain, tuple(slices))
    require_typed(term)
    return term


def format_term(term: MTerm) -> str:
    mode = term.mode
    if not term.slices:
        return f"id {format_object(term.domain, mode)}"
    return "; ".join(
        f"id {format_object(s.left, mode)}|{s.gen.value}|id {format_object(s.right, mode)}"
        for s in term.slices
    )
