"""Utilities for tlrewrite."""

from tlrewrite.util.log import configure_logging, get_logger, shutdown_logging
from tlrewrite.util.settings import BubbleConvention, Settings, SettingsManager

__all__ = [
    "BubbleConvention",
    "Settings",
    "SettingsManager",
    "configure_logging",
    "get_logger",
    "shutdown_logging",
]
