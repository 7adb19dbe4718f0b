"""
Critical pairs and joinability.

The overlap enumeration works on any sequences of hashable tokens, so the
framed words of the oriented algebra reuse it.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterator, Sequence
from dataclasses import dataclass
from typing import TypeVar
from enum import Enum

from pydantic import BaseModel, computed_field

from tlrewrite.rewrite.engine import Trace, normalize
from tlrewrite.rewrite.rules import RuleSystem
from tlrewrite.util.log import get_logger
from tlrewrite.words import Word, format_word

log = get_logger("rewrite.critical")

T = TypeVar("T", bound=Hashable)


class OverlapKind(str, Enum):
    """How two left-hand sides share letters."""

    OVERLAP = "overlap"  # proper suffix of the first = proper prefix of the second
    CONTAINMENT = "containment"  # the second occurs inside the first


def overlap_sources(
    first: Sequence[T], second: Sequence[T], *, same_rule: bool
) -> Iterator[tuple[OverlapKind, tuple[T, ...], int]]:
    """Yield (kind, source, position of ``second`` in source).

    ``first`` always sits at position 0 of the source. Disjoint placements
    and the trivial self-placement of a rule are excluded.
    """
    a, b = tuple(first), tuple(second)
    for shared in range(1, min(len(a), len(b))):
        if a[-shared:] == b[:shared]:
            yield OverlapKind.OVERLAP, a + b[shared:], len(a) - shared
    for position in range(len(a) - len(b) + 1):
        if same_rule and position == 0:
            continue
        if a[position : position + len(b)] == b:
            yield OverlapKind.CONTAINMENT, a, position


def splice(source: tuple[T, ...], position: int, width: int, insert: tuple[T, ...]):
    return source[:position] + insert + source[position + width :]


@dataclass(frozen=True, slots=True)
class Branch:
    """One side of a critical pair: the rule fired and its result."""

    rule_id: str
    position: int
    result: Word


@dataclass(frozen=True, slots=True)
class CriticalPair:
    source: Word
    left: Branch
    right: Branch
    kind: OverlapKind


def critical_pairs(system: RuleSystem) -> tuple[CriticalPair, ...]:
    """All overlaps and containments between left-hand sides."""
    pairs: list[CriticalPair] = []
    for i, first in enumerate(system.rules):
        for j, second in enumerate(system.rules):
            for kind, source, position in overlap_sources(
                first.lhs, second.lhs, same_rule=i == j
            ):
                left = splice(source, 0, len(first.lhs), first.rhs)
                right = splice(source, position, len(second.lhs), second.rhs)
                pairs.append(
                    CriticalPair(
                        source=source,
                        left=Branch(first.id, 0, left),
                        right=Branch(second.id, position, right),
                        kind=kind,
                    )
                )
    log.debug("{} critical pairs for {} rules", len(pairs), len(system.rules))
    return tuple(pairs)


@dataclass(frozen=True, slots=True)
class JoinVerdict:
    """Normal forms of both branches; equal means joinable."""

    pair: CriticalPair
    left_normal: Word
    right_normal: Word
    left_trace: Trace
    right_trace: Trace

    @property
    def joinable(self) -> bool:
        return self.left_normal == self.right_normal


def joinable(pair: CriticalPair, system: RuleSystem) -> JoinVerdict:
    left, left_trace = normalize(pair.left.result, system)
    right, right_trace = normalize(pair.right.result, system)
    return JoinVerdict(pair, left, right, left_trace, right_trace)


class PairRecord(BaseModel):
    """Flat, printable view of one checked critical pair."""

    source: str
    kind: OverlapKind
    left_rule: str
    right_rule: str
    left_normal: str
    right_normal: str
    joinable: bool


class ConfluenceReport(BaseModel):
    n: int
    rules: int
    pairs: int
    failures: list[PairRecord] = []

    @computed_field
    @property
    def confluent(self) -> bool:
        return not self.failures


def _record(verdict: JoinVerdict) -> PairRecord:
    return PairRecord(
        source=format_word(verdict.pair.source),
        kind=verdict.pair.kind,
        left_rule=verdict.pair.left.rule_id,
        right_rule=verdict.pair.right.rule_id,
        left_normal=format_word(verdict.left_normal),
        right_normal=format_word(verdict.right_normal),
        joinable=verdict.joinable,
    )


def check_confluence(system: RuleSystem) -> ConfluenceReport:
    """Join every critical pair; list the ones that do not join."""
    pairs = critical_pairs(system)
    failures = []
    for pair in pairs:
        verdict = joinable(pair, system)
        if not verdict.joinable:
            log.warning(
                "not joinable at {}: {} vs {}",
                format_word(pair.source),
                format_word(verdict.left_normal),
                format_word(verdict.right_normal),
            )
            failures.append(_record(verdict))
    return ConfluenceReport(
        n=system.n, rules=len(system.rules), pairs=len(pairs), failures=failures
    )
