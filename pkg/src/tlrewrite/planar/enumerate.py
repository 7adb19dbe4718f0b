"""
Counting and enumeration of diagrams, and the Dyck path bijection.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from tlrewrite.errors import BoundExceeded, InvalidPath
from tlrewrite.planar.diagram import Diagram
from tlrewrite.util.log import get_logger
from tlrewrite.util.settings import SettingsManager

log = get_logger("planar")

RIGHT, UP = "R", "U"


def count_diagrams(n: int) -> int:
    """u_0 = 1, u_n = sum_k u_k u_{n-1-k}.

    Iterates the equivalent step u_m = u_{m-1} (4m - 2) / (m + 1).
    """
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise ValueError(msg)
    count = 1
    for m in range(1, n + 1):
        count = count * (4 * m - 2) // (m + 1)
    return count


def noncrossing_matchings(m: int) -> Iterator[tuple[int, ...]]:
    """All noncrossing perfect matchings of points 1..2m, as partner tuples."""

    def pairings(first: int, last: int) -> Iterator[list[tuple[int, int]]]:
        if first > last:
            yield []
            return
        # ``first`` closes against an even-distance point so both sides stay even
        for partner in range(first + 1, last + 1, 2):
            for inside in pairings(first + 1, partner - 1):
                for outside in pairings(partner + 1, last):
                    yield [(first, partner), *inside, *outside]

    for pairs in pairings(1, 2 * m):
        match = [0] * (2 * m)
        for a, b in pairs:
            match[a - 1], match[b - 1] = b, a
        yield tuple(match)


def check_bound(n: int, bound: int | None) -> None:
    limit = SettingsManager.get().enumeration_bound if bound is None else bound
    if n > limit:
        msg = f"n={n} exceeds the enumeration bound {limit}"
        raise BoundExceeded(msg)


def enumerate_diagrams(n: int, *, bound: int | None = None) -> frozenset[Diagram]:
    """Every n-diagram (Catalan many)."""
    check_bound(n, bound)
    diagrams = frozenset(Diagram(n, match) for match in noncrossing_matchings(n))
    log.debug("enumerated {} diagrams for n={}", len(diagrams), n)
    return diagrams


@dataclass(frozen=True, slots=True)
class DyckPath:
    """Lattice path of R/U steps never going above the diagonal."""

    steps: str

    def __post_init__(self) -> None:
        height = 0
        for index, step in enumerate(self.steps, start=1):
            if step not in {RIGHT, UP}:
                msg = f"step {index}: expected R or U, got {step!r}"
                raise InvalidPath(msg)
            height += 1 if step == RIGHT else -1
            if height < 0:
                msg = f"step {index}: more U than R steps so far"
                raise InvalidPath(msg)
        if height:
            msg = f"path ends {height} R step(s) above its U steps"
            raise InvalidPath(msg)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return format_dyck(self)


def to_dyck(d: Diagram) -> DyckPath:
    """R when a link opens, U when it closes, scanning 1..2n."""
    return DyckPath(
        "".join(
            RIGHT if partner > point else UP
            for point, partner in enumerate(d.match, start=1)
        )
    )


def from_dyck(path: DyckPath) -> Diagram:
    """Each U closes the most recently opened link."""
    if not path.steps:
        msg = "empty path has no diagram (n must be >= 1)"
        raise InvalidPath(msg)
    match = [0] * len(path.steps)
    opened: list[int] = []
    for point, step in enumerate(path.steps, start=1):
        if step == RIGHT:
            opened.append(point)
        else:
            partner = opened.pop()
            match[point - 1], match[partner - 1] = partner, point
    return Diagram(path.n, tuple(match))


def parse_dyck(text: str) -> DyckPath:
    return DyckPath("".join(text.split()).upper())


def format_dyck(path: DyckPath) -> str:
    return " ".join(path.steps)
