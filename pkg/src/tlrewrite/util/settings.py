"""
Runtime settings: enumeration bounds, step budgets, bubble convention.

Values are held by ``SettingsManager`` at class level so that library code can
read them without threading a config object through every call; the CLI and
the tests adjust them through ``configure``/``override`` and ``reset``.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, Field


class BubbleConvention(str, Enum):
    """Scalar attached to an oriented closed loop."""

    CCW = "ccw"  # counterclockwise loop (cap₊∘cup₊) -> q
    CW = "cw"  # clockwise loop (cap₋∘cup₋) -> q

    @property
    def ccw_sign(self) -> int:
        """Exponent of q contributed by a counterclockwise loop."""
        return 1 if self is BubbleConvention.CCW else -1


class Settings(BaseModel):
    """Validated runtime settings."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    enumeration_bound: int = Field(default=8, ge=0)  # largest n for full enumerations
    step_budget: int = Field(default=100_000, ge=1)  # rewrite steps per normalization
    completion_budget: int = Field(default=1000, ge=0)  # rules Knuth-Bendix may add
    hom_bound: int = Field(default=12, ge=0)  # largest |v|+|w| for hom_basis
    bubble_convention: BubbleConvention = BubbleConvention.CCW


class SettingsManager:
    """Process-wide holder of the current ``Settings``."""

    _current: ClassVar[Settings] = Settings()

    @classmethod
    def get(cls) -> Settings:
        """Current settings."""
        return cls._current

    @classmethod
    def configure(cls, **overrides: Any) -> Settings:
        """Replace selected fields, validating the result."""
        unknown = set(overrides) - set(Settings.model_fields)
        if unknown:
            msg = f"unknown setting(s): {', '.join(sorted(unknown))}"
            raise ValueError(msg)
        cls._current = Settings.model_validate(
            {**cls._current.model_dump(), **overrides}
        )
        return cls._current

    @classmethod
    @contextmanager
    def override(cls, **overrides: Any) -> Iterator[Settings]:
        """Temporarily apply ``overrides``."""
        saved = cls._current
        try:
            yield cls.configure(**overrides)
        finally:
            cls._current = saved

    @classmethod
    def reset(cls) -> None:
        """Restore defaults (used by tests)."""
        cls._current = Settings()
