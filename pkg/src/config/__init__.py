# src/config/__init__.py
# Exports the shared settings object and the section classes

from .settings import settings, Settings, EngineConfig, SweepConfig, AppConfig

__all__ = [
    "settings",
    "Settings",
    "EngineConfig",
    "SweepConfig",
    "AppConfig",
]
