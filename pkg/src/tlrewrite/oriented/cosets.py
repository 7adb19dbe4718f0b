"""
Minimal coset representatives W_k of S_n / (S_k × S_{n-k}).

A representative is stored as its orientation word over ``v``/``^`` with k
symbols ``v``; its length is the number of pairs (a < b) with ``^`` at a and
``v`` at b, so ``v..v^..^`` has length 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from tlrewrite.category.objects import DOWN, UP
from tlrewrite.errors import InvalidOrientation
from tlrewrite.util.log import get_logger

log = get_logger("oriented")


def check_sizes(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        msg = f"need n >= 1 and 0 <= k <= n, got n={n} k={k}"
        raise InvalidOrientation(msg)


def check_orientation(word: str, n: int, k: int) -> str:
    """Return ``word`` after checking its symbols, length and ∨-count."""
    for position, symbol in enumerate(word):
        if symbol not in {DOWN, UP}:
            msg = f"orientation {word!r}, symbol {position}: expected 'v' or '^'"
            raise InvalidOrientation(msg)
    if len(word) != n:
        msg = f"orientation {word!r} has length {len(word)}, expected {n}"
        raise InvalidOrientation(msg)
    if word.count(DOWN) != k:
        msg = f"orientation {word!r} has {word.count(DOWN)} 'v', expected {k}"
        raise InvalidOrientation(msg)
    return word


def inversions(word: str) -> int:
    count, ups = 0, 0
    for symbol in word:
        if symbol == UP:
            ups += 1
        else:
            count += ups
    return count


def act(word: str, i: int) -> str | None:
    """λ s_i: swap positions i, i+1 (1-based) when they differ."""
    if not 1 <= i < len(word):
        msg = f"s_{i} out of range for {word!r}"
        raise InvalidOrientation(msg)
    a, b = word[i - 1], word[i]
    if a == b:
        return None
    return word[: i - 1] + b + a + word[i + 1 :]


@dataclass(frozen=True, slots=True)
class CosetRep:
    orientation: str
    length: int


def orientations(n: int, k: int) -> list[str]:
    """Every orientation word of the sector, in lexicographic order."""
    check_sizes(n, k)
    words = []
    for downs in combinations(range(n), k):
        chosen = set(downs)
        words.append("".join(DOWN if p in chosen else UP for p in range(n)))
    return sorted(words)


def generate_Wk(n: int, k: int) -> frozenset[CosetRep]:  # noqa: N802
    return frozenset(CosetRep(word, inversions(word)) for word in orientations(n, k))


def length_oracle(n: int, k: int) -> dict[str, int]:
    """Reduced-word lengths by BFS from ``v^k ^(n-k)`` over admissible s_i."""
    graph = nx.Graph()
    words = orientations(n, k)
    graph.add_nodes_from(words)
    for word in words:
        for i in range(1, n):
            if (other := act(word, i)) is not None:
                graph.add_edge(word, other, generator=i)
    source = DOWN * k + UP * (n - k)
    lengths = dict(nx.single_source_shortest_path_length(graph, source))
    log.debug("length oracle n={} k={}: {} representatives", n, k, len(lengths))
    return lengths
