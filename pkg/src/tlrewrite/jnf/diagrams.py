"""
Jones normal forms on the diagram side.

``diagram_to_jnf`` peels the last block off a diagram: with j the rightmost
top cup, the diagram factors as d = d' · (E_i E_{i-1} .. E_j) where d' lives on
the first i strands only. For every i in j..n-1 the factor d' is rebuilt by
strand surgery and kept when it composes back; exactly one i must survive.
"""

from __future__ import annotations

from tlrewrite.errors import InvalidDiagram
from tlrewrite.jnf.normal_form import Block, JnfWord, enumerate_jnf
from tlrewrite.planar import Diagram, ScaledDiagram, compose, format_diagram
from tlrewrite.util.log import get_logger
from tlrewrite.words import evaluate

log = get_logger("jnf")


def staircase(n: int, i: int, j: int) -> Diagram:
    """E_i E_{i-1} .. E_j as a single diagram."""
    if not 1 <= j <= i <= n - 1:
        msg = f"staircase needs 1 <= j <= i <= n-1, got n={n} i={i} j={j}"
        raise InvalidDiagram(msg)
    top = 2 * n + 1
    pairs = [(i, i + 1), (top - j, top - j - 1)]
    for b in range(1, n + 1):
        if b < j or b > i + 1:
            pairs.append((b, top - b))
        elif b <= i - 1:
            pairs.append((b, top - b - 2))
    return Diagram.from_pairs(n, pairs)


def _surgery(d: Diagram, i: int, j: int) -> Diagram | None:
    n, top = d.n, 2 * d.n + 1

    def shift(point: int) -> int:
        if point <= n:
            return point
        position = top - point
        if j + 2 <= position <= i + 1:
            position -= 2
        return top - position

    match = [0] * (2 * n)

    def join(a: int, b: int) -> None:
        match[a - 1], match[b - 1] = b, a

    for p in range(i + 1, n + 1):
        join(p, top - p)
    join(top - i, shift(d.partner(i + 1)))
    skipped = {i + 1, top - j, top - j - 1}
    skipped.update(p for p in range(i + 2, n + 1))
    skipped.update(top - p for p in range(i + 2, n + 1))
    for a, b in d.pairs():
        if a in skipped or b in skipped:
            continue
        join(shift(a), shift(b))

    try:
        rest = Diagram(n, tuple(match))
    except InvalidDiagram:
        return None
    if compose(rest, staircase(n, i, j)) != ScaledDiagram(0, d):
        return None
    return rest


def peel_candidates(d: Diagram) -> list[tuple[Block, Diagram]]:
    """Every (block, d') with d = d' · staircase(block), j at the rightmost top cup."""
    j = d.top_cups()[-1]
    return [
        ((i, j), rest)
        for i in range(j, d.n)
        if (rest := _surgery(d, i, j)) is not None
    ]


def _peel(d: Diagram) -> tuple[Block, Diagram]:
    found = peel_candidates(d)
    if len(found) != 1:
        blocks = [block for block, _ in found]
        msg = f"{format_diagram(d)} peels as {blocks}, expected exactly one block"
        raise RuntimeError(msg)
    return found[0]


def diagram_to_jnf(d: Diagram) -> JnfWord:
    """The unique δ-free JNF word evaluating to ``d``."""
    blocks: list[Block] = []
    current = d
    while not current.is_identity():
        block, current = _peel(current)
        blocks.append(block)
    result = JnfWord(0, tuple(reversed(blocks)))
    log.debug("{} -> {}", format_diagram(d), result)
    return result


def jnf_lookup_table(n: int, *, bound: int | None = None) -> dict[Diagram, JnfWord]:
    """Diagram -> JNF word, by evaluating every JNF word."""
    table: dict[Diagram, JnfWord] = {}
    for word in enumerate_jnf(n, bound=bound):
        image = evaluate(word.render(), n)
        if image.power or image.diagram in table:
            msg = f"JNF word {word} does not evaluate to a fresh basis diagram"
            raise RuntimeError(msg)
        table[image.diagram] = word
    return table
