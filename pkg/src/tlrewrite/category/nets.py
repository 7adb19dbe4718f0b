"""
Oriented nets: the semantics of slice terms.

A net from ``bottom`` to ``top`` pairs the points of the combined boundary
1..a+b, where bottom position p is point p and top position t (1-based,
left to right) is point a+b+1-t, the same convention as planar diagrams.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from pydantic import BaseModel

from tlrewrite.category.objects import (
    DOWN,
    POINT,
    Mode,
    cap_for,
    cup_for,
    format_object,
)
from tlrewrite.category.terms import MTerm, Slice, require_typed
from tlrewrite.errors import BoundExceeded, DimensionMismatch, InvalidDiagram
from tlrewrite.planar import Diagram, check_noncrossing, noncrossing_matchings
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager

log = get_logger("category")


def _symbol_at(bottom: str, top: str, point: int) -> str:
    a, b = len(bottom), len(top)
    if point <= a:
        return bottom[point - 1]
    return top[a + b - point]


def orientation_error(bottom: str, top: str, match: tuple[int, ...]) -> str | None:
    """Why ``match`` cannot be oriented compatibly, or None."""
    a = len(bottom)
    for point, partner in enumerate(match, start=1):
        if partner < point:
            continue
        x, y = _symbol_at(bottom, top, point), _symbol_at(bottom, top, partner)
        if POINT in (x, y):
            continue
        through = point <= a < partner
        if through and x != y:
            return f"through strand ({point},{partner}) joins {x} to {y}"
        if not through and x == y:
            return f"arc ({point},{partner}) joins {x} to {y}"
    return None


@dataclass(frozen=True, slots=True)
class ONet:
    """q^scalar_exp (δ^scalar_exp in plain mode) times a planar pairing."""

    bottom: str
    top: str
    match: tuple[int, ...]
    scalar_exp: int = 0

    def __post_init__(self) -> None:
        size = len(self.bottom) + len(self.top)
        if len(self.match) != size:
            msg = f"net needs {size} partners, got {len(self.match)}"
            raise InvalidDiagram(msg)
        check_noncrossing(self.match)
        if error := orientation_error(self.bottom, self.top, self.match):
            raise InvalidDiagram(error)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, q) for p, q in enumerate(self.match, start=1) if p < q)

    def __str__(self) -> str:
        return format_net(self)


class NetRecord(BaseModel):
    """JSON view of a net."""

    bottom: str
    top: str
    pairs: list[tuple[int, int]]
    scalar_exp: int


def net_record(net: ONet) -> NetRecord:
    return NetRecord(
        bottom=format_object(net.bottom),
        top=format_object(net.top),
        pairs=list(net.pairs()),
        scalar_exp=net.scalar_exp,
    )


def format_net(net: ONet) -> str:
    pairs = ",".join(f"({p},{q})" for p, q in net.pairs())
    text = f"{format_object(net.bottom)} -> {format_object(net.top)} [{pairs}]"
    return f"{text} * {loop_variable(net)}^{net.scalar_exp}" if net.scalar_exp else text


def loop_variable(net: ONet) -> str:
    return "d" if POINT in net.bottom + net.top else "q"


def loop_exponent(symbol: str) -> int:
    """Scalar of a loop whose lowest-leftmost crossing carries ``symbol``."""
    if symbol == POINT:
        return 1
    sign = SettingsManager.get().bubble_convention.ccw_sign
    # a loop entered downward at its lower-left corner runs counterclockwise
    return sign if symbol == DOWN else -sign


# -- evaluation ---------------------------------------------------------------

Node = tuple[int, int]  # (interface level, position)


def _wire(term: MTerm) -> dict[Node, list[tuple[Node, int]]]:
    links: dict[Node, list[tuple[Node, int]]] = defaultdict(list)
    edge = 0

    def link(u: Node, v: Node) -> None:
        nonlocal edge
        links[u].append((v, edge))
        links[v].append((u, edge))
        edge += 1

    for level, piece in enumerate(term.slices):
        a, below, above = piece.position, level, level + 1
        for p in range(a):
            link((below, p), (above, p))
        if piece.gen.is_cap:
            link((below, a), (below, a + 1))
            for r in range(len(piece.right)):
                link((below, a + 2 + r), (above, a + r))
        else:
            link((above, a), (above, a + 1))
            for r in range(len(piece.right)):
                link((below, a + r), (above, a + 2 + r))
    return links


def eval_net(term: MTerm) -> ONet:
    """Trace strands through the slices; closed loops become the scalar."""
    top = require_typed(term)
    a, b = len(term.domain), len(top)
    if not term.slices:
        return ONet(term.domain, top, tuple(a + b + 1 - p for p in range(1, a + b + 1)))

    last = len(term.slices)
    interfaces = term.interfaces()
    links = _wire(term)

    def point_of(node: Node) -> int:
        level, position = node
        return position + 1 if level == 0 else a + b - position

    def walk(start: Node) -> tuple[Node, list[Node]]:
        seen, node, via = [start], start, -1
        while True:
            nxt, edge = next((v, e) for v, e in links[node] if e != via)
            if nxt == start:
                return nxt, seen
            seen.append(nxt)
            if nxt[0] in {0, last}:
                return nxt, seen
            node, via = nxt, edge

    match = [0] * (a + b)
    visited: set[Node] = set()
    boundary = [(0, p) for p in range(a)] + [(last, p) for p in range(b)]
    for start in boundary:
        if start in visited:
            continue
        end, path = walk(start)
        visited.update(path)
        match[point_of(start) - 1], match[point_of(end) - 1] = (
            point_of(end),
            point_of(start),
        )

    scalar = 0
    for node in sorted(links):
        if node in visited:
            continue
        _, loop = walk(node)
        visited.update(loop)
        level, position = min(loop)
        scalar += loop_exponent(interfaces[level][position])
    return ONet(term.domain, top, tuple(match), scalar)


def net_to_diagram(net: ONet) -> Diagram:
    """The planar diagram of an endomorphism net of size n >= 1."""
    if len(net.bottom) != len(net.top):
        msg = f"net {format_net(net)} is not an endomorphism"
        raise DimensionMismatch(msg)
    return Diagram(len(net.bottom), net.match)


# -- bases --------------------------------------------------------------------


def hom_basis(v: str, w: str, *, bound: int | None = None) -> frozenset[ONet]:
    """Every orientation-compatible noncrossing pairing between v and w."""
    limit = SettingsManager.get().hom_bound if bound is None else bound
    size = len(v) + len(w)
    if size > limit:
        msg = f"|v|+|w| = {size} exceeds the hom bound {limit}"
        raise BoundExceeded(msg)
    if size % 2:
        return frozenset()
    basis = frozenset(
        ONet(v, w, match)
        for match in noncrossing_matchings(size // 2)
        if orientation_error(v, w, match) is None
    )
    log.debug(
        "hom({}, {}) has {} basis nets", format_object(v), format_object(w), len(basis)
    )
    return basis


def net_to_term(net: ONet) -> MTerm:
    """A redex-free term for ``net``: all caps first, then all cups."""
    a, b = len(net.bottom), len(net.top)
    slices: list[Slice] = []

    # caps, innermost first; ``alive`` lists the surviving bottom points
    alive = list(range(1, a + 1))
    interface = net.bottom
    for q in range(1, a + 1):
        p = net.match[q - 1]
        if p >= q:
            continue
        position = alive.index(p)
        gen = cap_for(interface[position : position + 2])
        if gen is None:
            msg = f"cannot cap {interface[position : position + 2]!r} in {format_net(net)}"
            raise InvalidDiagram(msg)
        slices.append(Slice.at(interface, position, gen))
        interface = slices[-1].cod
        del alive[position : position + 2]

    # cups, outer before inner and left before right, over top positions
    present = sorted(
        a + b + 1 - net.match[p - 1] for p in range(1, a + 1) if net.match[p - 1] > a
    )
    arcs = sorted(
        (a + b + 1 - q, a + b + 1 - p)
        for p, q in net.pairs()
        if p > a
    )
    for left, right in arcs:
        position = sum(1 for t in present if t < left)
        gen = cup_for(net.top[left - 1] + net.top[right - 1])
        if gen is None:
            msg = f"cannot cup top ({left},{right}) in {format_net(net)}"
            raise InvalidDiagram(msg)
        slices.append(Slice.at(interface, position, gen))
        interface = slices[-1].cod
        present = sorted([*present, left, right])
    return MTerm(net.bottom, tuple(slices))


def mode_of(v: str, w: str) -> Mode:
    return Mode.PLAIN if POINT in v + w else Mode.ORIENTED
