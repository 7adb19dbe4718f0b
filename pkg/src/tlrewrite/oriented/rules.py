"""
Rewriting rules of TLO_{n,k}(q) on framed token words.

Three kinds of ground rules are produced for a fixed (n, k):

* idempotents: 1_λ 1_μ -> 1_λ when λ = μ, else 0;
* annihilation of every layer 1_λ e_i 1_μ with μ not in {λ, λ s_i}
  (or λ s_i outside W_k);
* every consistent framing of a δ-free completed TL rule, the right-hand
  framing being the unique one with the same oriented net. The q exponent
  of a rule is whatever the net comparison leaves over.
"""

from __future__ import annotations

from collections.abc import Iterator
from enum import Enum

from pydantic import BaseModel, ConfigDict, PrivateAttr

from tlrewrite.category import ONet, eval_net
from tlrewrite.errors import UnsoundRule
from tlrewrite.oriented.cosets import act, check_sizes, inversions, orientations
from tlrewrite.oriented.words import (
    Tokens,
    format_tokens,
    framed_term,
    layer_consistent,
    tokens_value,
)
from tlrewrite.rewrite import RuleFamily, tl_rules
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager
from tlrewrite.words import Word, strip_delta

log = get_logger("oriented")


class OrientedFamily(str, Enum):
    IDEMPOTENT = "idem"  # 1_λ 1_μ -> δ_{λμ} 1_λ
    ANNIHILATION = "zero"  # inconsistent layer -> 0
    ESQUARE = "2"
    BRAID_UP = "3+"
    BRAID_DOWN = "3-"
    FAR_COMMUTE = "4"
    DESCENDING = "5"
    ASCENDING = "6"


class OrientedRule(BaseModel):
    """lhs -> q^exponent · rhs, or lhs -> 0 when rhs is None."""

    model_config = ConfigDict(frozen=True)

    id: str
    lhs: Tokens
    rhs: Tokens | None
    exponent: int = 0
    family: OrientedFamily

    def __str__(self) -> str:
        if self.rhs is None:
            return f"{self.id}: {format_tokens(self.lhs)} -> 0"
        scale = f"q^{self.exponent} " if self.exponent else ""
        return f"{self.id}: {format_tokens(self.lhs)} -> {scale}{format_tokens(self.rhs)}"


class OrientedRuleSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    rules: tuple[OrientedRule, ...]

    _by_lhs: dict[Tokens, int] = PrivateAttr(default_factory=dict)
    _lengths: tuple[int, ...] = PrivateAttr(default=())

    def model_post_init(self, context: object, /) -> None:
        self._by_lhs = {rule.lhs: index for index, rule in enumerate(self.rules)}
        self._lengths = tuple(sorted({len(rule.lhs) for rule in self.rules}))

    def rule_at(self, tokens: Tokens, position: int) -> int | None:
        best: int | None = None
        for length in self._lengths:
            if position + length > len(tokens):
                break
            index = self._by_lhs.get(tokens[position : position + length])
            if index is not None and (best is None or index < best):
                best = index
        return best

    def is_normal(self, tokens: Tokens) -> bool:
        return all(self.rule_at(tokens, p) is None for p in range(len(tokens)))

    def suffix_reducible(self, tokens: Tokens) -> bool:
        """Some left-hand side ends at the last token."""
        return any(
            tokens[-length:] in self._by_lhs
            for length in self._lengths
            if length <= len(tokens)
        )

    def max_lhs_length(self) -> int:
        return self._lengths[-1] if self._lengths else 0


def framings(gens: Word, n: int, k: int) -> Iterator[tuple[str, ...]]:
    """Every frame sequence making each layer of ``gens`` nonzero."""

    def extend(frames: tuple[str, ...], rest: Word) -> Iterator[tuple[str, ...]]:
        if not rest:
            yield frames
            return
        last, i = frames[-1], rest[0]
        swapped = act(last, i)
        for after in sorted({last} if swapped is None else {last, swapped}):
            if layer_consistent(last, i, after):
                yield from extend((*frames, after), rest[1:])

    for start in orientations(n, k):
        yield from extend((start,), gens)


def _interleave(frames: tuple[str, ...], gens: Word) -> Tokens:
    tokens: list[str | int] = [frames[0]]
    for i, frame in zip(gens, frames[1:], strict=True):
        tokens.extend((i, frame))
    return tuple(tokens)


def _check_sound(rule: OrientedRule) -> None:
    left = tokens_value(rule.lhs)
    if rule.rhs is None:
        right = None
    else:
        value = tokens_value(rule.rhs)
        right = None if value is None else ONet(
            value.bottom, value.top, value.match, value.scalar_exp + rule.exponent
        )
    if left != right:
        msg = f"rule {rule} changes the oriented net"
        raise UnsoundRule(msg, instance=rule)


def _net(frames: tuple[str, ...], gens: Word) -> ONet:
    term = framed_term(frames, gens)
    if term is None:
        msg = f"framing {frames} of {gens} does not type"
        raise RuntimeError(msg)
    return eval_net(term)


def _framed_rules(n: int, k: int) -> Iterator[OrientedRule]:
    sign = SettingsManager.get().bubble_convention.ccw_sign
    for base in tl_rules(n, completed=True).rules:
        if base.family is RuleFamily.DELTA_SHIFT:
            continue
        family = OrientedFamily(base.family.value)
        target = strip_delta(base.rhs)
        by_ends: dict[tuple[str, str], list[tuple[tuple[str, ...], ONet]]] = {}
        for frames in framings(target, n, k):
            by_ends.setdefault((frames[0], frames[-1]), []).append(
                (frames, _net(frames, target))
            )
        for frames in framings(base.lhs, n, k):
            net = _net(frames, base.lhs)
            lhs = _interleave(frames, base.lhs)
            matches = [
                (rhs_frames, rhs_net)
                for rhs_frames, rhs_net in by_ends.get((frames[0], frames[-1]), [])
                if rhs_net.match == net.match
            ]
            if len(matches) != 1:
                msg = (
                    f"{base.id} framed as {format_tokens(lhs)}: "
                    f"{len(matches)} right-hand framings share its net"
                )
                raise UnsoundRule(msg, instance=lhs)
            rhs_frames, rhs_net = matches[0]
            exponent = net.scalar_exp - rhs_net.scalar_exp
            if family is OrientedFamily.ESQUARE:
                middle = frames[1]
                swapped = act(middle, base.lhs[0]) or middle
                expected = sign * (inversions(swapped) - inversions(middle))
                if exponent != expected:
                    msg = (
                        f"{format_tokens(lhs)}: loop gives q^{exponent}, "
                        f"length change gives q^{expected}"
                    )
                    raise UnsoundRule(msg, instance=lhs)
            elif exponent:
                msg = f"{format_tokens(lhs)}: unexpected scalar q^{exponent}"
                raise UnsoundRule(msg, instance=lhs)
            yield OrientedRule(
                id=f"{base.id}@{'|'.join(frames)}",
                lhs=lhs,
                rhs=_interleave(rhs_frames, target),
                exponent=exponent,
                family=family,
            )



def oriented_rules(n: int, k: int, *, validate: bool = True) -> OrientedRuleSystem:
    """Idempotent, annihilation and framed TL rules for the sector (n, k)."""
    check_sizes(n, k)
    frames = orientations(n, k)
    rules: list[OrientedRule] = [
        OrientedRule(
            id=f"idem[{a},{b}]",
            lhs=(a, b),
            rhs=(a,) if a == b else None,
            family=OrientedFamily.IDEMPOTENT,
        )
        for a in frames
        for b in frames
    ]
    rules.extend(
        OrientedRule(
            id=f"zero[{a},{i},{b}]",
            lhs=(a, i, b),
            rhs=None,
            family=OrientedFamily.ANNIHILATION,
        )
        for a in frames
        for i in range(1, n)
        for b in frames
        if not layer_consistent(a, i, b)
    )
    if n >= 2:  # noqa: PLR2004
        rules.extend(_framed_rules(n, k))
    if validate:
        for rule in rules:
            _check_sound(rule)
    log.debug("oriented rules n={} k={}: {}", n, k, len(rules))
    return OrientedRuleSystem(n=n, k=k, rules=tuple(rules))
