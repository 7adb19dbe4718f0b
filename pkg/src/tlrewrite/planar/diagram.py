"""
Temperley-Lieb diagrams as noncrossing pairings of the boundary.

Boundary numbering of an n-diagram (2n points):

    top     2n   2n-1  ...  n+1        (top position t is point 2n+1-t)
    bottom   1     2   ...   n

so reading 1..2n walks the boundary once, counterclockwise, and a diagram is
exactly a noncrossing perfect matching of that line (its bridge).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from tlrewrite.errors import DimensionMismatch, InvalidDiagram
from tlrewrite.laurent import LaurentInt


def check_noncrossing(match: tuple[int, ...]) -> None:
    """``match`` is a noncrossing fixed-point-free involution of 1..len(match)."""
    size = len(match)
    for point, partner in enumerate(match, start=1):
        if not 1 <= partner <= size:
            msg = f"point {point}: partner {partner} out of range 1..{size}"
            raise InvalidDiagram(msg)
        if partner == point:
            msg = f"point {point} is paired with itself"
            raise InvalidDiagram(msg)
        if match[partner - 1] != point:
            msg = (
                f"point {point} -> {partner} but {partner} -> "
                f"{match[partner - 1]}"
            )
            raise InvalidDiagram(msg)
    opened: list[int] = []
    for point, partner in enumerate(match, start=1):
        if partner > point:
            opened.append(point)
            continue
        last = opened.pop()
        if last != partner:
            msg = (
                f"pairs ({partner},{point}) and ({last},{match[last - 1]}) cross"
            )
            raise InvalidDiagram(msg)


def _check_pairing(n: int, match: tuple[int, ...]) -> None:
    if n < 1:
        msg = f"n must be >= 1, got {n}"
        raise InvalidDiagram(msg)
    if len(match) != 2 * n:
        msg = f"expected {2 * n} partners, got {len(match)}"
        raise InvalidDiagram(msg)
    check_noncrossing(match)


@dataclass(frozen=True, slots=True)
class Diagram:
    """Noncrossing fixed-point-free involution on 1..2n; ``match[p-1]`` pairs p."""

    n: int
    match: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_pairing(self.n, self.match)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Diagram:
        match = [0] * (2 * n)
        for position, (a, b) in enumerate(pairs, start=1):
            for point in (a, b):
                if not 1 <= point <= 2 * n:
                    msg = (
                        f"pair {position} ({a},{b}): point {point} out of "
                        f"range 1..{2 * n}"
                    )
                    raise InvalidDiagram(msg)
                if match[point - 1]:
                    msg = f"pair {position} ({a},{b}): point {point} used twice"
                    raise InvalidDiagram(msg)
            if a == b:
                msg = f"pair {position} ({a},{b}): point paired with itself"
                raise InvalidDiagram(msg)
            match[a - 1], match[b - 1] = b, a
        missing = [p for p, partner in enumerate(match, start=1) if not partner]
        if missing:
            msg = f"points {missing} are not paired"
            raise InvalidDiagram(msg)
        return cls(n, tuple(match))

    def partner(self, point: int) -> int:
        return self.match[point - 1]

    def top_point(self, position: int) -> int:
        """Boundary number of the top point above bottom ``position``."""
        return 2 * self.n + 1 - position

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, q) for p, q in enumerate(self.match, start=1) if p < q)

    def is_straight(self, position: int) -> bool:
        """Bottom ``position`` is joined to the top point right above it."""
        return self.partner(position) == self.top_point(position)

    def is_identity(self) -> bool:
        return all(self.is_straight(i) for i in range(1, self.n + 1))

    def bottom_caps(self) -> tuple[int, ...]:
        """Positions i with bottom i joined to bottom i+1."""
        return tuple(i for i in range(1, self.n) if self.partner(i) == i + 1)

    def top_cups(self) -> tuple[int, ...]:
        """Positions t with top t joined to top t+1."""
        return tuple(
            t
            for t in range(1, self.n)
            if self.partner(self.top_point(t)) == self.top_point(t + 1)
        )

    def through_strands(self) -> int:
        return sum(1 for p in range(1, self.n + 1) if self.partner(p) > self.n)

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True, slots=True)
class ScaledDiagram:
    """δ^power · diagram."""

    power: int
    diagram: Diagram

    def __post_init__(self) -> None:
        if self.power < 0:
            msg = f"power must be >= 0, got {self.power}"
            raise InvalidDiagram(msg)

    @property
    def n(self) -> int:
        return self.diagram.n


def identity(n: int) -> Diagram:
    if n < 1:
        msg = f"identity needs n >= 1, got {n}"
        raise InvalidDiagram(msg)
    return Diagram(n, tuple(2 * n + 1 - p for p in range(1, 2 * n + 1)))


def generator(n: int, i: int) -> Diagram:
    """E_i: bottom cap (i, i+1), top cup above it, straight elsewhere."""
    if not 1 <= i <= n - 1:
        msg = f"generator index {i} out of range 1..{n - 1}"
        raise InvalidDiagram(msg)
    match = list(identity(n).match)
    top_i, top_next = 2 * n + 1 - i, 2 * n - i
    match[i - 1], match[i] = i + 1, i
    match[top_i - 1], match[top_next - 1] = top_next, top_i
    return Diagram(n, tuple(match))


def _scaled(value: Diagram | ScaledDiagram) -> ScaledDiagram:
    return value if isinstance(value, ScaledDiagram) else ScaledDiagram(0, value)


def compose(
    lower: Diagram | ScaledDiagram, upper: Diagram | ScaledDiagram
) -> ScaledDiagram:
    """Stack ``upper`` on top of ``lower`` (the product lower·upper)."""
    a, b = _scaled(lower), _scaled(upper)
    if a.n != b.n:
        msg = f"cannot compose diagrams with n={a.n} and n={b.n}"
        raise DimensionMismatch(msg)
    n, da, db = a.n, a.diagram, b.diagram
    size = 2 * n
    match = [0] * size
    # middle position m is top position m of ``lower`` = bottom m of ``upper``
    crossed = [False] * (n + 1)

    for start in range(1, size + 1):
        if match[start - 1]:
            continue
        in_lower, point = start <= n, start
        while True:
            if in_lower:
                nxt = da.partner(point)
                if nxt <= n:
                    break
                middle = size + 1 - nxt
                crossed[middle] = True
                in_lower, point = False, middle
            else:
                nxt = db.partner(point)
                if nxt > n:
                    break
                crossed[nxt] = True
                in_lower, point = True, size + 1 - nxt
        match[start - 1], match[nxt - 1] = nxt, start

    loops = 0
    for middle in range(1, n + 1):
        if crossed[middle]:
            continue
        loops += 1
        current = middle
        while not crossed[current]:
            crossed[current] = True
            down = db.partner(current)  # another middle position
            crossed[down] = True
            current = size + 1 - da.partner(size + 1 - down)

    return ScaledDiagram(a.power + b.power + loops, Diagram(n, tuple(match)))


def transpose(d: Diagram) -> Diagram:
    """Flip upside down: bottom position i <-> top position i."""
    size = 2 * d.n
    flip = [0] * size
    for point, partner in enumerate(d.match, start=1):
        flip[size - point] = size + 1 - partner
    return Diagram(d.n, tuple(flip))


def multiply_combinations(
    x: Mapping[Diagram, LaurentInt], y: Mapping[Diagram, LaurentInt]
) -> dict[Diagram, LaurentInt]:
    """Bilinear product of δ-weighted diagram combinations."""
    result: dict[Diagram, LaurentInt] = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            product = compose(d1, d2)
            term = (c1 * c2).shift(product.power)
            result[product.diagram] = result.get(product.diagram, LaurentInt()) + term
    return {d: c for d, c in result.items() if c}


# -- text ---------------------------------------------------------------------

_PAIR = r"\(\s*\d+\s*,\s*\d+\s*\)"
_PAIR_LIST = re.compile(rf"\[\s*(?:{_PAIR}\s*(?:,\s*{_PAIR}\s*)*)?\]")
_LITERAL = re.compile(r"\s*n\s*=\s*(\d+)\s*(\[.*\])\s*", re.DOTALL)


def parse_pairs(n: int, text: str) -> Diagram:
    """Parse a bare pair list ``[(1,2),(3,4)]`` for the given n."""
    body = text.strip()
    if not _PAIR_LIST.fullmatch(body):
        msg = f"malformed pair list {text!r}; expected [(a,b),(c,d),...]"
        raise InvalidDiagram(msg)
    pairs = [
        (int(a), int(b)) for a, b in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body)
    ]
    if len(pairs) != n:
        msg = f"n={n} needs {n} pairs, got {len(pairs)}"
        raise InvalidDiagram(msg)
    return Diagram.from_pairs(n, pairs)


def parse_diagram(text: str) -> Diagram:
    """Parse the literal ``n=4 [(1,2),(3,8),(4,7),(5,6)]``."""
    found = _LITERAL.fullmatch(text)
    if found is None:
        msg = f"malformed diagram literal {text!r}; expected 'n=<N> [(a,b),...]'"
        raise InvalidDiagram(msg)
    return parse_pairs(int(found.group(1)), found.group(2))


def format_pairs(d: Diagram) -> str:
    return "[" + ",".join(f"({a},{b})" for a, b in d.pairs()) + "]"


def format_diagram(d: Diagram) -> str:
    return f"n={d.n} {format_pairs(d)}"
