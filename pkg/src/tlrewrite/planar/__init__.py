"""Unoriented Temperley-Lieb diagrams: arithmetic, enumeration, bijections."""

from tlrewrite.planar.diagram import (
    Diagram,
    ScaledDiagram,
    check_noncrossing,
    compose,
    format_diagram,
    format_pairs,
    generator,
    identity,
    multiply_combinations,
    parse_diagram,
    parse_pairs,
    transpose,
)
from tlrewrite.planar.enumerate import (
    DyckPath,
    check_bound,
    count_diagrams,
    enumerate_diagrams,
    format_dyck,
    from_dyck,
    noncrossing_matchings,
    parse_dyck,
    to_dyck,
)

__all__ = [
    "Diagram",
    "DyckPath",
    "ScaledDiagram",
    "check_bound",
    "check_noncrossing",
    "compose",
    "count_diagrams",
    "enumerate_diagrams",
    "format_diagram",
    "format_dyck",
    "format_pairs",
    "from_dyck",
    "generator",
    "identity",
    "multiply_combinations",
    "noncrossing_matchings",
    "parse_diagram",
    "parse_dyck",
    "parse_pairs",
    "to_dyck",
    "transpose",
]
