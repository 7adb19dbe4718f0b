"""
Exception hierarchy for tlrewrite.

Every domain failure raised by the library derives from ``TLError`` so the
CLI can map it onto exit code 1 in one place.
"""

from __future__ import annotations

from typing import Any


class TLError(ValueError):
    """Base class for all domain errors."""


class InvalidDiagram(TLError):
    """Pairing is not a noncrossing fixed-point-free involution."""


class InvalidWord(TLError):
    """Unknown token or generator index out of range."""


class InvalidPath(TLError):
    """Malformed Dyck path."""


class InvalidOrientation(TLError):
    """Orientation word with a bad symbol, length or ∨-count."""


class InvalidTerm(TLError):
    """Unparseable category term or object word."""


class TypeMismatch(TLError):
    """Slice chain (or composition) does not type."""


class DimensionMismatch(TLError):
    """Operands live in different ambient n."""


class BoundExceeded(TLError):
    """Enumeration requested above the configured bound."""


class StepBudgetExceeded(TLError):
    """Normalization ran past its step budget."""


class CompletionFailed(TLError):
    """Knuth-Bendix completion could not finish."""


class NotJonesNormalForm(TLError):
    """Word does not match the Jones normal form pattern."""


class UnsoundRule(TLError):
    """A rule instance whose sides have different semantics."""

    def __init__(self, msg: str, *, instance: Any = None) -> None:
        super().__init__(msg)
        self.instance = instance


class InvalidCoefficient(TLError):
    """Text or expression that is not an integer Laurent polynomial."""
