from __future__ import annotations

import pytest

from tlrewrite.util import SettingsManager, shutdown_logging


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from default settings and no installed sinks."""
    SettingsManager.reset()
    yield
    SettingsManager.reset()
    shutdown_logging()
