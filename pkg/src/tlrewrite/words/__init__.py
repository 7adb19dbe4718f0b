"""The presented algebra: words, linear combinations, evaluation."""

from tlrewrite.words.lincomb import (
    LinComb,
    evaluate,
    evaluate_lincomb,
    format_lincomb,
    lincomb_records,
    multiply,
    parse_lincomb,
    split_top_level,
)
from tlrewrite.words.word import (
    DELTA,
    Letter,
    Word,
    check_word,
    delta_count,
    format_word,
    parse_word,
    shortlex_key,
    strip_delta,
)

__all__ = [
    "DELTA",
    "LinComb",
    "Letter",
    "Word",
    "check_word",
    "delta_count",
    "evaluate",
    "evaluate_lincomb",
    "format_lincomb",
    "format_word",
    "lincomb_records",
    "multiply",
    "parse_lincomb",
    "parse_word",
    "shortlex_key",
    "split_top_level",
    "strip_delta",
]
