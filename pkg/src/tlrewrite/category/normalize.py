"""
Rewriting slice terms modulo exchange.

Rules: a cup followed by a cap on one of its legs straightens to the identity
(zigzag); a cup closed by a cap on both legs is removed for a scalar
(bubble). A redex is located by following each cup leg upward until a cap
consumes it; the two slices are then made adjacent by exchange moves, which
fails only when a bubble still encloses another redex.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel, computed_field

from tlrewrite.category.exchange import canonical_order, swap
from tlrewrite.category.nets import eval_net, loop_exponent, mode_of
from tlrewrite.category.objects import DOWN, POINT, UP, GenArrow, Mode
from tlrewrite.category.terms import MTerm, Slice, format_term, require_typed
from tlrewrite.util.log import get_logger

log = get_logger("category")


class RedexKind(str, Enum):
    ZIGZAG = "zigzag"  # cup then cap sharing one leg -> identity
    BUBBLE = "bubble"  # cup then cap sharing both legs -> scalar


@dataclass(frozen=True, slots=True)
class Redex:
    kind: RedexKind
    cup: int  # slice index of the cup
    cap: int  # slice index of the cap


@dataclass(frozen=True, slots=True)
class CategoryStep:
    redex: Redex
    scalar: int
    before: MTerm
    after: MTerm


def _cap_above(slices: tuple[Slice, ...], start: int, position: int) -> int | None:
    """Index of the cap that consumes the strand at ``position`` of interface ``start``."""
    for index in range(start, len(slices)):
        piece = slices[index]
        left = piece.position
        if piece.gen.is_cap:
            if position in {left, left + 1}:
                return index
            if position > left + 1:
                position -= 2
        elif position >= left:
            position += 2
    return None


def find_redexes(term: MTerm) -> list[Redex]:
    """Cup/cap pairs joined directly by strands, ordered by cup then leg."""
    found: list[Redex] = []
    for index, piece in enumerate(term.slices):
        if piece.gen.is_cap:
            continue
        legs = [
            _cap_above(term.slices, index + 1, piece.position + leg) for leg in (0, 1)
        ]
        if legs[0] is not None and legs[0] == legs[1]:
            found.append(Redex(RedexKind.BUBBLE, index, legs[0]))
            continue
        found.extend(
            Redex(RedexKind.ZIGZAG, index, cap) for cap in legs if cap is not None
        )
    return found


def _push_down(block: list[Slice], piece: Slice, floor: int) -> list[Slice] | None:
    """Append ``piece`` to ``block`` and swap it down to index ``floor``."""
    current = [*block, piece]
    for k in range(len(current) - 1, floor, -1):
        swapped = swap(current[k - 1], current[k])
        if swapped is None:
            return None
        current[k - 1], current[k] = swapped
    return current


def adjacent(
    slices: tuple[Slice, ...], cup: int, cap: int
) -> tuple[tuple[Slice, ...], int] | None:
    """Reorder so the cap directly follows the cup; returns the cup's new index."""
    lowered: list[Slice] = []
    block = [slices[cup]]
    for piece in slices[cup + 1 : cap]:
        moved = _push_down(block, piece, 0)
        if moved is None:
            block.append(piece)
        else:
            lowered.append(moved[0])
            block = moved[1:]
    joined = _push_down(block, slices[cap], 1)
    if joined is None:
        return None
    head = [*slices[:cup], *lowered]
    return (*head, *joined, *slices[cap + 1 :]), len(head)


def apply_redex(term: MTerm, redex: Redex) -> tuple[int, MTerm] | None:
    """Fire ``redex``: (scalar exponent, result), or None if it cannot be isolated."""
    placed = adjacent(term.slices, redex.cup, redex.cap)
    if placed is None:
        return None
    slices, at = placed
    cup, cap = slices[at], slices[at + 1]
    if cap.position not in {cup.position - 1, cup.position, cup.position + 1}:
        msg = f"cap at {cap.position} does not meet cup at {cup.position}"
        raise RuntimeError(msg)
    scalar = 0
    if redex.kind is RedexKind.BUBBLE:
        scalar = loop_exponent(cup.gen.cod[0])
    return scalar, MTerm(term.domain, slices[:at] + slices[at + 2 :])


def rewrite_steps(term: MTerm) -> Iterator[CategoryStep]:
    """Fire the first isolable redex until none is left."""
    require_typed(term)
    current = term
    while True:
        for redex in find_redexes(current):
            fired = apply_redex(current, redex)
            if fired is not None:
                break
        else:
            return
        scalar, after = fired
        yield CategoryStep(redex, scalar, current, after)
        current = after


def is_redex_free(term: MTerm) -> bool:
    return next(rewrite_steps(term), None) is None


def normalize_term(term: MTerm) -> tuple[int, MTerm]:
    """(total scalar exponent, exchange-canonical normal form)."""
    scalar, current, count = 0, term, 0
    for step in rewrite_steps(term):
        scalar += step.scalar
        current = step.after
        count += 1
    log.debug("{} -> {} in {} steps (scalar {})", format_term(term), current, count, scalar)
    return scalar, canonical_order(current)


def _extensions(cod: str, mode: Mode) -> Iterator[Slice]:
    for gen in GenArrow:
        if gen.mode is not mode:
            continue
        width = len(gen.dom)
        for position in range(len(cod) - width + 1):
            if cod[position : position + width] == gen.dom:
                yield Slice.at(cod, position, gen)


def enumerate_normal_terms(v: str, w: str, max_generators: int) -> frozenset[MTerm]:
    """Redex-free terms v -> w (up to exchange) with at most ``max_generators``."""
    mode = mode_of(v, w)
    frontier = {MTerm(v)}
    found: set[MTerm] = set()
    for depth in range(max_generators + 1):
        found.update(t for t in frontier if t.codomain == w)
        if depth == max_generators:
            break
        frontier = {
            canonical_order(extended)
            for t in frontier
            for piece in _extensions(t.codomain, mode)
            if is_redex_free(extended := MTerm(v, (*t.slices, piece)))
        }
    return frozenset(found)


# -- critical pairs -------------------------------------------------------------


class CriticalInstance(BaseModel):
    """One three-generator overlap and how its two rewrites rejoin."""

    family: str
    term: str
    left: str
    right: str
    joinable: bool
    net_preserved: bool


class ModuloCriticalReport(BaseModel):
    mode: Mode
    families: dict[str, list[CriticalInstance]]

    @computed_field
    @property
    def family_count(self) -> int:
        return len(self.families)

    @computed_field
    @property
    def all_joinable(self) -> bool:
        return all(
            item.joinable and item.net_preserved
            for items in self.families.values()
            for item in items
        )


def _objects(mode: Mode, size: int) -> list[str]:
    symbols = (POINT,) if mode is Mode.PLAIN else (DOWN, UP)
    words = [""]
    for _ in range(size):
        words = [word + symbol for word in words for symbol in symbols]
    return words


def _three_slice_terms(mode: Mode) -> set[MTerm]:
    terms: set[MTerm] = set()
    for size in range(3):
        for domain in _objects(mode, size):
            layer = [MTerm(domain)]
            for _ in range(3):
                layer = [
                    MTerm(domain, (*t.slices, piece))
                    for t in layer
                    for piece in _extensions(t.codomain, mode)
                ]
            terms.update(
                canonical_order(t)
                for t in layer
                if len(t.domain) + len(t.codomain) == 2  # noqa: PLR2004
            )
    return terms


def _join(term: MTerm, redex: Redex) -> tuple[int, MTerm] | None:
    fired = apply_redex(term, redex)
    if fired is None:
        return None
    scalar, after = fired
    extra, normal = normalize_term(after)
    return scalar + extra, normal


def modulo_critical_pairs(mode: Mode) -> ModuloCriticalReport:
    """Overlapping redexes of three-generator terms, grouped by the shared generator."""
    families: dict[str, list[CriticalInstance]] = {}
    for term in sorted(_three_slice_terms(mode), key=format_term):
        redexes = find_redexes(term)
        reference = eval_net(term)
        for i, first in enumerate(redexes):
            for second in redexes[i + 1 :]:
                shared = {first.cup, first.cap} & {second.cup, second.cap}
                if len(shared) != 1:
                    continue
                left, right = _join(term, first), _join(term, second)
                if left is None or right is None:
                    continue
                family = "cup-cap-cup" if first.cap == second.cap else "cap-cup-cap"
                preserved = all(
                    (net := eval_net(normal)).match == reference.match
                    and net.scalar_exp + scalar == reference.scalar_exp
                    for scalar, normal in (left, right)
                )
                families.setdefault(family, []).append(
                    CriticalInstance(
                        family=family,
                        term=format_term(term),
                        left=format_term(left[1]),
                        right=format_term(right[1]),
                        joinable=left == right,
                        net_preserved=preserved,
                    )
                )
    report = ModuloCriticalReport(mode=mode, families=families)
    log.info(
        "{} mode: {} critical families, {} instances",
        mode.value,
        report.family_count,
        sum(len(items) for items in families.values()),
    )
    return report
