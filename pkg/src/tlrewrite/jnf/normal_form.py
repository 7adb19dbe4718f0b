"""
Jones normal forms on the word side.

A JNF word is δ^p followed by descending blocks e_i e_{i-1} .. e_j whose
starting indices and ending indices both strictly increase from block to
block.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from tlrewrite.errors import NotJonesNormalForm
from tlrewrite.planar import check_bound
from tlrewrite.util.log import get_logger
from tlrewrite.words import DELTA, Word, format_word, strip_delta

log = get_logger("jnf")

Block = tuple[int, int]


def _describe(block: Block) -> str:
    i, j = block
    return format_word(range(i, j - 1, -1))


@dataclass(frozen=True, slots=True)
class JnfWord:
    """δ^p (e_{i_1}..e_{j_1}) .. (e_{i_r}..e_{j_r})."""

    p: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        if self.p < 0:
            msg = f"δ-prefix count must be >= 0, got {self.p}"
            raise NotJonesNormalForm(msg)
        previous: Block | None = None
        for index, (i, j) in enumerate(self.blocks):
            if not 1 <= j <= i:
                msg = f"block {index}: need 1 <= j <= i, got ({i},{j})"
                raise NotJonesNormalForm(msg)
            if previous is not None:
                if i <= previous[0]:
                    msg = (
                        f"block {index} ({_describe((i, j))}): starts at e{i}, "
                        f"not after e{previous[0]}"
                    )
                    raise NotJonesNormalForm(msg)
                if j <= previous[1]:
                    msg = (
                        f"block {index} ({_describe((i, j))}): ends at e{j}, "
                        f"not after e{previous[1]}"
                    )
                    raise NotJonesNormalForm(msg)
            previous = (i, j)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Block], p: int = 0) -> JnfWord:
        return cls(p, tuple((int(i), int(j)) for i, j in blocks))

    def render(self) -> Word:
        letters = [DELTA] * self.p
        for i, j in self.blocks:
            letters.extend(range(i, j - 1, -1))
        return tuple(letters)

    def max_index(self) -> int:
        """Largest generator index (0 for a pure power of δ)."""
        return self.blocks[-1][0] if self.blocks else 0

    def __str__(self) -> str:
        return format_word(self.render()) or "1"


def parse_jnf(word: Word) -> JnfWord:
    """Split ``word`` into JNF blocks or raise at the first violation."""
    p = 0
    while p < len(word) and word[p] == DELTA:
        p += 1
    rest = word[p:]
    for offset, letter in enumerate(rest):
        if letter == DELTA:
            msg = f"letter {p + offset}: δ after the δ prefix"
            raise NotJonesNormalForm(msg)

    blocks: list[Block] = []
    if rest:
        start = low = rest[0]
        for letter in rest[1:]:
            if letter == low - 1:
                low = letter
                continue
            blocks.append((start, low))
            start = low = letter
        blocks.append((start, low))
    return JnfWord(p, tuple(blocks))


def is_jnf(word: Word) -> JnfWord | None:
    """The parsed structure, or None when ``word`` is not in JNF."""
    try:
        return parse_jnf(word)
    except NotJonesNormalForm:
        return None


def _block_sequences(n: int, last: Block) -> Iterator[tuple[Block, ...]]:
    yield ()
    for i in range(last[0] + 1, n):
        for j in range(last[1] + 1, i + 1):
            for tail in _block_sequences(n, (i, j)):
                yield ((i, j), *tail)


def enumerate_jnf(n: int, *, bound: int | None = None) -> frozenset[JnfWord]:
    """All δ-free JNF words over e_1..e_{n-1}."""
    check_bound(n, bound)
    words = frozenset(JnfWord(0, blocks) for blocks in _block_sequences(n, (0, 0)))
    log.debug("enumerated {} JNF words for n={}", len(words), n)
    return words


def has_unique_max_index(word: Word) -> bool:
    """The largest generator index occurs at most once (vacuous without e_i)."""
    letters = strip_delta(word)
    if not letters:
        return True
    return letters.count(max(letters)) == 1
