"""Jones normal forms: recognizer, enumerator and the diagram algorithm."""

from tlrewrite.jnf.diagrams import (
    diagram_to_jnf,
    jnf_lookup_table,
    peel_candidates,
    staircase,
)
from tlrewrite.jnf.normal_form import (
    Block,
    JnfWord,
    enumerate_jnf,
    has_unique_max_index,
    is_jnf,
    parse_jnf,
)

__all__ = [
    "Block",
    "JnfWord",
    "diagram_to_jnf",
    "enumerate_jnf",
    "has_unique_max_index",
    "is_jnf",
    "jnf_lookup_table",
    "parse_jnf",
    "peel_candidates",
    "staircase",
]
