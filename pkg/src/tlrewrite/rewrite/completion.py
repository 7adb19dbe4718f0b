"""
Bounded Knuth-Bendix completion for shortlex-oriented word rules.

Rounds alternate between interreduction (no lhs contains another lhs, every
rhs is irreducible) and orienting the critical pairs that fail to join. The
reduced convergent system for a fixed order is unique, which is what lets the
result be compared with the hand-written completed rules.
"""

from __future__ import annotations

from tlrewrite.errors import CompletionFailed, UnsoundRule
from tlrewrite.rewrite.critical import overlap_sources, splice
from tlrewrite.rewrite.rules import Rule, RuleFamily, RuleSystem
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager
from tlrewrite.words import Word, evaluate, format_word, shortlex_key

log = get_logger("rewrite.completion")


def _contains(word: Word, factor: Word) -> bool:
    width = len(factor)
    return any(
        word[p : p + width] == factor for p in range(len(word) - width + 1)
    )


def _reduce(word: Word, rules: dict[Word, Word]) -> Word:
    lengths = sorted({len(lhs) for lhs in rules})
    current = word
    changed = True
    while changed:
        changed = False
        for position in range(len(current)):
            for width in lengths:
                rhs = rules.get(current[position : position + width])
                if rhs is not None and position + width <= len(current):
                    current = splice(current, position, width, rhs)
                    changed = True
                    break
            if changed:
                break
    return current


class _Completion:
    """Mutable state of one completion run."""

    def __init__(self, system: RuleSystem, budget: int) -> None:
        self.n = system.n
        self.budget = budget
        self.added = 0
        self.rules: dict[Word, Word] = {r.lhs: r.rhs for r in system.rules}
        self.labels: dict[Word, Rule] = {r.lhs: r for r in system.rules}

    def orient(self, u: Word, v: Word) -> bool:
        """Add u = v as a rule if the sides do not already join."""
        a, b = _reduce(u, self.rules), _reduce(v, self.rules)
        if a == b:
            return False
        if shortlex_key(a) == shortlex_key(b):
            msg = f"cannot orient {format_word(a)} = {format_word(b)}"
            raise CompletionFailed(msg)
        lhs, rhs = (a, b) if shortlex_key(a) > shortlex_key(b) else (b, a)
        if evaluate(lhs, self.n) != evaluate(rhs, self.n):
            msg = f"completion produced an unsound rule {format_word(lhs)} -> {format_word(rhs)}"
            raise UnsoundRule(msg, instance=(lhs, rhs))
        self.rules[lhs] = rhs
        return True

    def interreduce(self) -> None:
        changed = True
        while changed:
            changed = False
            for lhs in sorted(self.rules, key=shortlex_key):
                rhs = self.rules[lhs]
                others = [other for other in self.rules if other != lhs]
                if any(_contains(lhs, other) for other in others):
                    del self.rules[lhs]
                    self.labels.pop(lhs, None)
                    self.orient(lhs, rhs)
                    changed = True
                    break
                reduced = _reduce(rhs, self.rules)
                if reduced != rhs:
                    self.rules[lhs] = reduced
                    changed = True

    def unjoined(self) -> list[tuple[Word, Word]]:
        found: set[tuple[Word, Word]] = set()
        items = sorted(self.rules.items(), key=lambda kv: shortlex_key(kv[0]))
        for i, (lhs1, rhs1) in enumerate(items):
            for j, (lhs2, rhs2) in enumerate(items):
                for _, source, position in overlap_sources(
                    lhs1, lhs2, same_rule=i == j
                ):
                    left = _reduce(splice(source, 0, len(lhs1), rhs1), self.rules)
                    right = _reduce(
                        splice(source, position, len(lhs2), rhs2), self.rules
                    )
                    if left != right:
                        found.add(tuple(sorted((left, right), key=shortlex_key)))
        return sorted(found, key=lambda pair: (shortlex_key(pair[1]), pair[0]))

    def result(self) -> RuleSystem:
        kept: list[Rule] = []
        fresh: list[Word] = []
        for lhs, rhs in self.rules.items():
            label = self.labels.get(lhs)
            if label is None:
                fresh.append(lhs)
            else:
                kept.append(label if label.rhs == rhs else label.model_copy(update={"rhs": rhs}))
        order = {rule.id: index for index, rule in enumerate(self.labels.values())}
        kept.sort(key=lambda rule: order[rule.id])
        fresh.sort(key=shortlex_key)
        new_rules = [
            Rule(
                id=f"kb{index}",
                lhs=lhs,
                rhs=self.rules[lhs],
                family=RuleFamily.COMPLETION,
            )
            for index, lhs in enumerate(fresh, start=1)
        ]
        return RuleSystem.build(self.n, [*kept, *new_rules])


def knuth_bendix(system: RuleSystem, budget: int | None = None) -> RuleSystem:
    """Complete ``system``; ``budget`` caps the number of rules added."""
    limit = SettingsManager.get().completion_budget if budget is None else budget
    state = _Completion(system, limit)
    round_no = 0
    while True:
        round_no += 1
        state.interreduce()
        pending = state.unjoined()
        if not pending:
            break
        log.info("round {}: {} unjoined critical pairs", round_no, len(pending))
        for small, large in pending:
            if state.orient(large, small):
                state.added += 1
                log.debug("added {} -> {}", format_word(large), format_word(small))
                if state.added > limit:
                    msg = f"completion budget of {limit} new rules exhausted"
                    raise CompletionFailed(msg)
    completed = state.result()
    log.info(
        "completion finished after {} rounds: {} rules ({} added)",
        round_no,
        len(completed.rules),
        state.added,
    )
    return completed
