"""Logging for tlrewrite, built on loguru.

Library modules ask for a named logger and never configure sinks themselves:

    from tlrewrite.util.log import get_logger

    log = get_logger("rewrite.completion")
    log.info("round {}: {} new rules", 2, 6)

The package follows the loguru convention for libraries: its records are
disabled on import and never reach the host application's sinks. The CLI (or a
test) turns them on by calling ``configure_logging``, which only ever removes
sinks it installed itself.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any

from loguru import logger as _logger

_PACKAGE = "tlrewrite"
_LOADER_SINK = 0
_SINKS: list[int] = []

_logger.disable(_PACKAGE)

_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[logger_name]}</cyan> | "
    "<level>{message}</level>"
)
_FILE_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[logger_name]} | "
    "{name}:{function}:{line} - {message}"
)


def _named(record: dict[str, Any]) -> bool:
    return "logger_name" in record["extra"]


class _StdlibBridge(logging.Handler):
    """Re-emit stdlib ``logging`` records through loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = _logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        _logger.bind(logger_name=record.name).opt(
            depth=depth, exception=record.exc_info
        ).log(level, record.getMessage())


def configure_logging(
    *,
    level: str = "INFO",
    log_dir: str | Path | None = None,
    to_console: bool = True,
    rotation: str = "10 MB",
    retention: str = "7 days",
    enqueue: bool = False,
    diagnose: bool = False,
    intercept_std_logging: bool = False,
) -> None:
    """(Re)install the sinks of this package and enable its records.

    Sinks added by the host application stay untouched; only loguru's
    preinstalled stderr sink is dropped.

    Args:
        level: minimum level for every sink.
        log_dir: when given, also write ``tl_<date>.log`` files there.
        to_console: write to stderr (stdout is reserved for results).
        rotation: loguru rotation policy of the file sink.
        retention: loguru retention policy of the file sink.
        enqueue: route records through a queue (multiprocess safe).
        diagnose: show local variables in tracebacks.
        intercept_std_logging: forward stdlib ``logging`` into loguru.
    """

    shutdown_logging()
    # loguru's preinstalled DEBUG stderr sink would bypass ``level``.
    try:
        _logger.remove(_LOADER_SINK)
    except ValueError:
        pass

    if to_console:
        _SINKS.append(
            _logger.add(
                sys.stderr,
                level=level,
                format=_FORMAT,
                filter=_named,
                enqueue=enqueue,
                diagnose=diagnose,
            )
        )

    if log_dir is not None:
        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        _SINKS.append(
            _logger.add(
                str(directory / "tl_{time:YYYYMMDD}.log"),
                level=level,
                format=_FILE_FORMAT,
                filter=_named,
                rotation=rotation,
                retention=retention,
                enqueue=enqueue,
                diagnose=diagnose,
                encoding="utf-8",
            )
        )

    if intercept_std_logging:
        logging.basicConfig(handlers=[_StdlibBridge()], level=0, force=True)

    _logger.enable(_PACKAGE)


def get_logger(logger_name: str | None = None, /, **extra: Any):
    """Return the loguru logger bound to ``logger_name`` and ``extra``."""

    bound = _logger.bind(logger_name=logger_name or "tl")
    return bound.bind(**extra) if extra else bound


def shutdown_logging() -> None:
    """Drop the sinks installed by ``configure_logging``; mute the package again."""

    for sink_id in _SINKS:
        try:
            _logger.remove(sink_id)
        except ValueError:
            pass
    _SINKS.clear()
    _logger.disable(_PACKAGE)
