"""
The exchange relation as a structural congruence.

Two adjacent slices commute when the points one of them creates are disjoint
from the points the other consumes. ``canonical_order`` picks the least slice
order (by position, then generator) reachable by such swaps.
"""

from __future__ import annotations

from tlrewrite.category.terms import MTerm, Slice, require_typed


def swap(first: Slice, second: Slice) -> tuple[Slice, Slice] | None:
    """``second`` then ``first``, re-positioned; None when they do not commute."""
    a, made = first.position, len(first.gen.cod)
    used = len(first.gen.dom)
    b, read = second.position, len(second.gen.dom)
    base = first.dom
    if b >= a + made:
        moved = Slice.at(base, b - made + used, second.gen)
        return moved, Slice.at(moved.cod, a, first.gen)
    if b + read <= a:
        moved = Slice.at(base, b, second.gen)
        return moved, Slice.at(moved.cod, a + len(second.gen.cod) - read, first.gen)
    return None


def independent(first: Slice, second: Slice) -> bool:
    return swap(first, second) is not None


def to_front(slices: tuple[Slice, ...], index: int) -> tuple[Slice, ...] | None:
    """Move ``slices[index]`` to the bottom by swaps, if every swap is allowed."""
    current = list(slices)
    for k in range(index, 0, -1):
        swapped = swap(current[k - 1], current[k])
        if swapped is None:
            return None
        current[k - 1], current[k] = swapped
    return tuple(current)


def _key(piece: Slice) -> tuple[int, int]:
    return (piece.position, piece.gen.rank)


def _least(
    slices: tuple[Slice, ...], memo: dict[tuple[Slice, ...], tuple[Slice, ...]]
) -> tuple[Slice, ...]:
    if len(slices) <= 1:
        return slices
    if (known := memo.get(slices)) is not None:
        return known
    fronts = [
        moved
        for index in range(len(slices))
        if (moved := to_front(slices, index)) is not None
    ]
    best = min(_key(moved[0]) for moved in fronts)
    options = {moved[1:] for moved in fronts if _key(moved[0]) == best}
    head = next(moved[0] for moved in fronts if _key(moved[0]) == best)
    tails = [_least(tail, memo) for tail in options]
    least = (head, *min(tails, key=lambda tail: [_key(s) for s in tail]))
    memo[slices] = least
    return least


def canonical_order(term: MTerm) -> MTerm:
    """The exchange-canonical representative of ``term``."""
    require_typed(term)
    return MTerm(term.domain, _least(term.slices, {}))


def exchange_equivalent(t1: MTerm, t2: MTerm) -> bool:
    return t1.domain == t2.domain and canonical_order(t1) == canonical_order(t2)
