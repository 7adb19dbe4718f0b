"""The oriented algebra TLO_{n,k}(q): cosets, framed words, rules, sectors."""

from tlrewrite.oriented.cosets import (
    CosetRep,
    act,
    check_orientation,
    generate_Wk,
    inversions,
    length_oracle,
    orientations,
)
from tlrewrite.oriented.normalize import (
    OrientedConfluenceReport,
    OrientedCriticalPair,
    SectorRow,
    SectorTable,
    check_oriented_confluence,
    normalize_oriented,
    oriented_critical_pairs,
    oriented_joinable,
    reduce_tokens,
    sector_dimension,
    sector_table,
)
from tlrewrite.oriented.rules import (
    OrientedFamily,
    OrientedRule,
    OrientedRuleSystem,
    framings,
    oriented_rules,
)
from tlrewrite.oriented.words import (
    OrientedLinComb,
    OrientedWord,
    Token,
    Tokens,
    format_oriented,
    format_tokens,
    framed_term,
    layer_consistent,
    oriented_records,
    parse_oriented,
    tokens_value,
)

__all__ = [
    "CosetRep",
    "OrientedConfluenceReport",
    "OrientedCriticalPair",
    "OrientedFamily",
    "OrientedLinComb",
    "OrientedRule",
    "OrientedRuleSystem",
    "OrientedWord",
    "SectorRow",
    "SectorTable",
    "Token",
    "Tokens",
    "act",
    "check_orientation",
    "check_oriented_confluence",
    "format_oriented",
    "format_tokens",
    "framed_term",
    "framings",
    "generate_Wk",
    "inversions",
    "layer_consistent",
    "length_oracle",
    "normalize_oriented",
    "oriented_critical_pairs",
    "oriented_joinable",
    "oriented_records",
    "oriented_rules",
    "parse_oriented",
    "reduce_tokens",
    "sector_dimension",
    "sector_table",
    "tokens_value",
]
