# tests/conftest.py
# Shared fixtures

import pytest

from config import settings


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    # The CLI writes overrides into the shared settings object; pin and restore them per test
    monkeypatch.setattr(settings.sweep, "jobs", 1)
    monkeypatch.setattr(settings.sweep, "long_run", False)
    monkeypatch.setattr(settings.app, "output_format", "text")
    monkeypatch.setattr(settings.app, "log_level", settings.app.log_level)
    monkeypatch.setattr(settings.engine, "step_budget", None)
    yield settings
