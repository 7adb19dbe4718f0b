"""
Normalization, critical pairs and sector dimensions for TLO_{n,k}(q).
"""

from __future__ import annotations

from dataclasses import dataclass

from pydantic import BaseModel, computed_field

from tlrewrite.category import hom_basis
from tlrewrite.errors import BoundExceeded, InvalidOrientation, StepBudgetExceeded
from tlrewrite.laurent import LaurentInt
from tlrewrite.oriented.cosets import check_orientation, orientations
from tlrewrite.oriented.rules import OrientedRuleSystem
from tlrewrite.oriented.words import OrientedLinComb, Tokens, format_tokens
from tlrewrite.planar import check_bound
from tlrewrite.rewrite import OverlapKind, overlap_sources, splice
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager

log = get_logger("oriented")


def reduce_tokens(
    tokens: Tokens, system: OrientedRuleSystem, *, budget: int | None = None
) -> tuple[Tokens | None, int]:
    """(normal form or None for zero, accumulated q exponent)."""
    limit = SettingsManager.get().step_budget if budget is None else budget
    reach = system.max_lhs_length()
    current, exponent, steps, scan_from = tokens, 0, 0, 0
    while True:
        for position in range(scan_from, len(current)):
            index = system.rule_at(current, position)
            if index is not None:
                break
        else:
            return current, exponent
        steps += 1
        if steps > limit:
            msg = f"no normal form within {limit} steps from {format_tokens(tokens)!r}"
            raise StepBudgetExceeded(msg)
        rule = system.rules[index]
        if rule.rhs is None:
            return None, 0
        current = splice(current, position, len(rule.lhs), rule.rhs)
        exponent += rule.exponent
        scan_from = max(0, position - reach + 1)


def normalize_oriented(
    x: OrientedLinComb, system: OrientedRuleSystem, *, budget: int | None = None
) -> OrientedLinComb:
    """Rewrite every monomial to normal form; zeros vanish."""
    if (x.n, x.k) != (system.n, system.k):
        msg = f"combination lives in n={x.n},k={x.k}, rules in n={system.n},k={system.k}"
        raise InvalidOrientation(msg)
    result: dict[Tokens, LaurentInt] = {}
    for tokens, coeff in x.terms.items():
        normal, exponent = reduce_tokens(tokens, system, budget=budget)
        if normal is None:
            continue
        result[normal] = result.get(normal, LaurentInt()) + coeff.shift(exponent)
    normalized = OrientedLinComb(n=x.n, k=x.k, terms=result)
    log.debug("{} monomials -> {} normal monomials", len(x.terms), len(normalized.terms))
    return normalized


# -- critical pairs -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class OrientedCriticalPair:
    source: Tokens
    left_rule: str
    right_rule: str
    left: Tokens | None  # None is zero
    right: Tokens | None
    left_exponent: int
    right_exponent: int
    kind: OverlapKind


def oriented_critical_pairs(system: OrientedRuleSystem) -> tuple[OrientedCriticalPair, ...]:
    starting: dict[object, list[int]] = {}
    for index, rule in enumerate(system.rules):
        starting.setdefault(rule.lhs[0], []).append(index)

    pairs: list[OrientedCriticalPair] = []
    for i, first in enumerate(system.rules):
        candidates = sorted({j for token in first.lhs for j in starting.get(token, [])})
        for j in candidates:
            second = system.rules[j]
            for kind, source, position in overlap_sources(
                first.lhs, second.lhs, same_rule=i == j
            ):
                left = (
                    None
                    if first.rhs is None
                    else splice(source, 0, len(first.lhs), first.rhs)
                )
                right = (
                    None
                    if second.rhs is None
                    else splice(source, position, len(second.lhs), second.rhs)
                )
                pairs.append(
                    OrientedCriticalPair(
                        source=source,
                        left_rule=first.id,
                        right_rule=second.id,
                        left=left,
                        right=right,
                        left_exponent=first.exponent,
                        right_exponent=second.exponent,
                        kind=kind,
                    )
                )
    log.debug("{} oriented critical pairs", len(pairs))
    return tuple(pairs)


def _branch(
    tokens: Tokens | None, exponent: int, system: OrientedRuleSystem
) -> tuple[Tokens | None, int]:
    if tokens is None:
        return None, 0
    normal, extra = reduce_tokens(tokens, system)
    return (normal, exponent + extra) if normal is not None else (None, 0)


def oriented_joinable(pair: OrientedCriticalPair, system: OrientedRuleSystem) -> bool:
    left = _branch(pair.left, pair.left_exponent, system)
    right = _branch(pair.right, pair.right_exponent, system)
    return left == right


class OrientedConfluenceReport(BaseModel):
    n: int
    k: int
    rules: int
    pairs: int
    failures: list[str] = []

    @computed_field
    @property
    def confluent(self) -> bool:
        return not self.failures


def check_oriented_confluence(system: OrientedRuleSystem) -> OrientedConfluenceReport:
    pairs = oriented_critical_pairs(system)
    failures = []
    for pair in pairs:
        if not oriented_joinable(pair, system):
            log.warning(
                "oriented pair at {} ({} / {}) does not join",
                format_tokens(pair.source),
                pair.left_rule,
                pair.right_rule,
            )
            failures.append(f"{format_tokens(pair.source)}: {pair.left_rule} / {pair.right_rule}")
    return OrientedConfluenceReport(
        n=system.n,
        k=system.k,
        rules=len(system.rules),
        pairs=len(pairs),
        failures=failures,
    )


# -- dimensions -----------------------------------------------------------------


def sector_dimension(source: str, target: str, system: OrientedRuleSystem) -> int:
    """Number of irreducible framed words from 1_source to 1_target."""
    n, k = system.n, system.k
    check_orientation(source, n, k)
    check_orientation(target, n, k)
    check_bound(n, None)
    longest = n * n  # far above the longest normal word
    count = 0
    stack: list[Tokens] = [(source,)]
    while stack:
        core = stack.pop()
        if core[-1] == target:
            count += 1
        if len(core) // 2 >= longest:
            msg = f"irreducible word {format_tokens(core)!r} exceeds {longest} generators"
            raise BoundExceeded(msg)
        for i in range(1, n):
            for frame in orientations(n, k):
                extended = (*core, i, frame)
                if not system.suffix_reducible(extended):
                    stack.append(extended)
    return count


class SectorRow(BaseModel):
    source: str
    target: str
    dimension: int
    oracle: int


class SectorTable(BaseModel):
    n: int
    k: int
    rows: list[SectorRow]

    @computed_field
    @property
    def total(self) -> int:
        return sum(row.dimension for row in self.rows)

    @computed_field
    @property
    def consistent(self) -> bool:
        return all(row.dimension == row.oracle for row in self.rows)


def sector_table(system: OrientedRuleSystem) -> SectorTable:
    """Every (source, target) sector with its count and the net-basis count."""
    frames = orientations(system.n, system.k)
    rows = [
        SectorRow(
            source=a,
            target=b,
            dimension=sector_dimension(a, b, system),
            oracle=len(hom_basis(a, b)),
        )
        for a in frames
        for b in frames
    ]
    return SectorTable(n=system.n, k=system.k, rows=rows)
