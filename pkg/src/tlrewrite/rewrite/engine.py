"""
Normalization: leftmost redex first, lowest rule index on ties.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from tlrewrite.errors import StepBudgetExceeded
from tlrewrite.rewrite.rules import RuleSystem
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager
from tlrewrite.words import Word, check_word, format_word

log = get_logger("rewrite.engine")


@dataclass(frozen=True, slots=True)
class RewriteStep:
    """One application of a rule."""

    rule_id: str
    position: int
    before: Word
    after: Word

    def format(self) -> str:
        return (
            f"rule={self.rule_id} pos={self.position} "
            f"{format_word(self.before)} => {format_word(self.after)}"
        )


Trace = tuple[RewriteStep, ...]


def _budget(budget: int | None) -> int:
    return SettingsManager.get().step_budget if budget is None else budget


def _exhausted(word: Word, limit: int) -> StepBudgetExceeded:
    msg = f"no normal form within {limit} steps starting from {format_word(word)!r}"
    return StepBudgetExceeded(msg)


def _run(
    word: Word, system: RuleSystem, limit: int, steps: list[RewriteStep] | None
) -> Word:
    current = word
    # nothing left of ``scan_from`` can be a redex
    scan_from, count = 0, 0
    reach = system.max_lhs_length()
    while True:
        for position in range(scan_from, len(current)):
            index = system.rule_at(current, position)
            if index is not None:
                break
        else:
            return current
        count += 1
        if count > limit:
            raise _exhausted(word, limit)
        rule = system.rules[index]
        rewritten = (
            current[:position] + rule.rhs + current[position + len(rule.lhs) :]
        )
        if steps is not None:
            steps.append(RewriteStep(rule.id, position, current, rewritten))
        current = rewritten
        scan_from = max(0, position - reach + 1)


def reduce_word(word: Word, system: RuleSystem, *, budget: int | None = None) -> Word:
    """Normal form without recording a trace."""
    return _run(check_word(word, system.n), system, _budget(budget), None)


def normalize(
    word: Word, system: RuleSystem, *, budget: int | None = None
) -> tuple[Word, Trace]:
    """Normal form of ``word`` and the trace that reaches it."""
    steps: list[RewriteStep] = []
    result = _run(check_word(word, system.n), system, _budget(budget), steps)
    log.debug(
        "{} -> {} in {} steps", format_word(word), format_word(result), len(steps)
    )
    return result, tuple(steps)


def normalize_random(
    word: Word,
    system: RuleSystem,
    rng: random.Random,
    *,
    budget: int | None = None,
) -> tuple[Word, Trace]:
    """Normalize picking a uniformly random redex at every step."""
    limit = _budget(budget)
    current = check_word(word, system.n)
    steps: list[RewriteStep] = []
    while redexes := system.redexes(current):
        if len(steps) >= limit:
            raise _exhausted(word, limit)
        position, index = rng.choice(redexes)
        rule = system.rules[index]
        rewritten = (
            current[:position] + rule.rhs + current[position + len(rule.lhs) :]
        )
        steps.append(RewriteStep(rule.id, position, current, rewritten))
        current = rewritten
    return current, tuple(steps)


def replays(step: RewriteStep, system: RuleSystem) -> bool:
    """``step.before`` has the rule's lhs at ``position`` and ``after`` substitutes it."""
    rule = system.by_id(step.rule_id)
    end = step.position + len(rule.lhs)
    return (
        step.before[step.position : end] == rule.lhs
        and step.after == step.before[: step.position] + rule.rhs + step.before[end:]
    )
