"""String rewriting for TL_n(δ): rules, normalization, confluence, completion."""

from tlrewrite.rewrite.completion import knuth_bendix
from tlrewrite.rewrite.critical import (
    Branch,
    ConfluenceReport,
    CriticalPair,
    JoinVerdict,
    OverlapKind,
    PairRecord,
    check_confluence,
    critical_pairs,
    joinable,
    overlap_sources,
    splice,
)
from tlrewrite.rewrite.engine import (
    RewriteStep,
    Trace,
    normalize,
    normalize_random,
    reduce_word,
    replays,
)
from tlrewrite.rewrite.rules import (
    Rule,
    RuleCertificate,
    RuleFamily,
    RuleSystem,
    TerminationCertificate,
    check_termination_order,
    shortlex_decreases,
    tl_rules,
)

__all__ = [
    "Branch",
    "ConfluenceReport",
    "CriticalPair",
    "JoinVerdict",
    "OverlapKind",
    "PairRecord",
    "RewriteStep",
    "Rule",
    "RuleCertificate",
    "RuleFamily",
    "RuleSystem",
    "TerminationCertificate",
    "Trace",
    "check_confluence",
    "check_termination_order",
    "critical_pairs",
    "joinable",
    "knuth_bendix",
    "normalize",
    "normalize_random",
    "overlap_sources",
    "reduce_word",
    "replays",
    "shortlex_decreases",
    "splice",
    "tl_rules",
]
