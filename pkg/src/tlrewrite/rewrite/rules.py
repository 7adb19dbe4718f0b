"""
Ground rewriting rules for TL_n(δ) and the termination certificate.

Rules are instantiated per fixed n, so every rule is a pair of concrete words.
Termination is certified against shortlex (length, then lexicographic with
δ < e_1 < ...); plain lexicographic order is not well founded across lengths.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from tlrewrite.errors import InvalidWord, UnsoundRule
from tlrewrite.util.log import get_logger
from tlrewrite.words import DELTA, Word, check_word, evaluate, format_word

log = get_logger("rewrite.rules")


class RuleFamily(str, Enum):
    """Where a rule comes from."""

    DELTA_SHIFT = "1"  # e_i δ -> δ e_i
    SQUARE = "2"  # e_i e_i -> δ e_i
    BRAID_UP = "3+"  # e_i e_{i+1} e_i -> e_i
    BRAID_DOWN = "3-"  # e_i e_{i-1} e_i -> e_i
    FAR_COMMUTE = "4"  # e_i e_j -> e_j e_i, j < i-1
    DESCENDING = "5"  # e_i e_{i-1}..e_{i-k} e_i -> e_{i-2}..e_{i-k} e_i
    ASCENDING = "6"  # e_i e_{i+k}..e_{i+1} e_i -> e_i e_{i+k}..e_{i+2}
    COMPLETION = "kb"  # oriented by Knuth-Bendix
    CUSTOM = "custom"  # hand-made


class Rule(BaseModel):
    """lhs -> rhs over the letters of words.Word."""

    model_config = ConfigDict(frozen=True)

    id: str
    lhs: Word = Field(min_length=1)
    rhs: Word
    family: RuleFamily = RuleFamily.CUSTOM

    def __str__(self) -> str:
        return f"{self.id}: {format_word(self.lhs)} -> {format_word(self.rhs) or '1'}"


class RuleSystem(BaseModel):
    """An indexed set of rules; index order is the tie-break priority."""

    model_config = ConfigDict(frozen=True)

    n: int
    rules: tuple[Rule, ...]

    _by_lhs: dict[Word, int] = PrivateAttr(default_factory=dict)
    _lengths: tuple[int, ...] = PrivateAttr(default=())

    def model_post_init(self, context: object, /) -> None:
        self._by_lhs = {rule.lhs: index for index, rule in enumerate(self.rules)}
        self._lengths = tuple(sorted({len(rule.lhs) for rule in self.rules}))

    @classmethod
    def build(cls, n: int, rules: Iterable[Rule]) -> RuleSystem:
        """Construct after checking letters, orientation and soundness."""
        rules = tuple(rules)
        seen: set[Word] = set()
        for rule in rules:
            check_word(rule.lhs, n)
            check_word(rule.rhs, n)
            if rule.lhs in seen:
                msg = f"rule {rule.id}: duplicate left-hand side"
                raise InvalidWord(msg)
            seen.add(rule.lhs)
            if not shortlex_decreases(rule):
                msg = f"rule {rule.id} does not decrease shortlex: {rule}"
                raise UnsoundRule(msg, instance=rule)
            if evaluate(rule.lhs, n) != evaluate(rule.rhs, n):
                msg = f"rule {rule.id} changes the diagram value: {rule}"
                raise UnsoundRule(msg, instance=rule)
        return cls(n=n, rules=rules)

    def rule_at(self, word: Word, position: int) -> int | None:
        """Lowest-index rule whose lhs occurs at ``position``."""
        best: int | None = None
        for length in self._lengths:
            end = position + length
            if end > len(word):
                break
            index = self._by_lhs.get(word[position:end])
            if index is not None and (best is None or index < best):
                best = index
        return best

    def redexes(self, word: Word) -> list[tuple[int, int]]:
        """Every (position, rule index) that can fire in ``word``."""
        found = []
        for position in range(len(word)):
            for length in self._lengths:
                index = self._by_lhs.get(word[position : position + length])
                if index is not None and position + length <= len(word):
                    found.append((position, index))
        return found

    def is_normal(self, word: Word) -> bool:
        return all(self.rule_at(word, p) is None for p in range(len(word)))

    def max_lhs_length(self) -> int:
        return self._lengths[-1] if self._lengths else 0

    def by_id(self, rule_id: str) -> Rule:
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        msg = f"no rule with id {rule_id!r}"
        raise KeyError(msg)

    def as_pairs(self) -> frozenset[tuple[Word, Word]]:
        """Rules without labels, for comparing systems."""
        return frozenset((rule.lhs, rule.rhs) for rule in self.rules)


def shortlex_decreases(rule: Rule) -> bool:
    return (len(rule.rhs), rule.rhs) < (len(rule.lhs), rule.lhs)


def _instances(n: int, *, completed: bool) -> Iterator[Rule]:
    gens = range(1, n)
    for i in gens:
        yield Rule(
            id=f"1[i={i}]", lhs=(i, DELTA), rhs=(DELTA, i), family=RuleFamily.DELTA_SHIFT
        )
    for i in gens:
        yield Rule(id=f"2[i={i}]", lhs=(i, i), rhs=(DELTA, i), family=RuleFamily.SQUARE)
    for i in range(1, n - 1):
        yield Rule(
            id=f"3+[i={i}]", lhs=(i, i + 1, i), rhs=(i,), family=RuleFamily.BRAID_UP
        )
    for i in range(2, n):
        yield Rule(
            id=f"3-[i={i}]", lhs=(i, i - 1, i), rhs=(i,), family=RuleFamily.BRAID_DOWN
        )
    for i in gens:
        for j in range(1, i - 1):
            yield Rule(
                id=f"4[i={i},j={j}]",
                lhs=(i, j),
                rhs=(j, i),
                family=RuleFamily.FAR_COMMUTE,
            )
    if not completed:
        return
    for i in gens:
        for k in range(2, i):
            down = tuple(range(i - 1, i - k - 1, -1))  # e_{i-1} .. e_{i-k}
            yield Rule(
                id=f"5[i={i},k={k}]",
                lhs=(i, *down, i),
                rhs=(*down[1:], i),
                family=RuleFamily.DESCENDING,
            )
    for i in gens:
        for k in range(2, n - i):
            up = tuple(range(i + k, i, -1))  # e_{i+k} .. e_{i+1}
            yield Rule(
                id=f"6[i={i},k={k}]",
                lhs=(i, *up, i),
                rhs=(i, *up[:-1]),
                family=RuleFamily.ASCENDING,
            )


def tl_rules(n: int, *, completed: bool = True) -> RuleSystem:
    """Ground instances of rules (1)-(4), plus (5)/(6) when ``completed``."""
    if n < 2:  # noqa: PLR2004
        msg = f"rules need n >= 2, got {n}"
        raise InvalidWord(msg)
    system = RuleSystem.build(n, _instances(n, completed=completed))
    log.debug(
        "instantiated {} rules for n={} ({})",
        len(system.rules),
        n,
        "completed" if completed else "base",
    )
    return system


# -- termination --------------------------------------------------------------


class RuleCertificate(BaseModel):
    """Why one rule decreases shortlex."""

    rule_id: str
    reason: Literal["length", "lex"]


class TerminationCertificate(BaseModel):
    """Per-rule certificates, or the first rule that fails."""

    certified: list[RuleCertificate] = []
    offending: Rule | None = None

    @property
    def ok(self) -> bool:
        return self.offending is None


def check_termination_order(rules: RuleSystem | Iterable[Rule]) -> TerminationCertificate:
    """Check every rule strictly decreases shortlex."""
    pool = rules.rules if isinstance(rules, RuleSystem) else tuple(rules)
    certified: list[RuleCertificate] = []
    for rule in pool:
        if len(rule.rhs) < len(rule.lhs):
            certified.append(RuleCertificate(rule_id=rule.id, reason="length"))
        elif len(rule.rhs) == len(rule.lhs) and rule.rhs < rule.lhs:
            certified.append(RuleCertificate(rule_id=rule.id, reason="lex"))
        else:
            return TerminationCertificate(certified=certified, offending=rule)
    return TerminationCertificate(certified=certified)
