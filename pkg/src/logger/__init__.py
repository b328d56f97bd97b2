# src/logger/__init__.py
# Named 'logger' to avoid shadowing the standard library 'logging' module

from .logging import setup_logging, get_logger, RunIDFilter

__all__ = [
    "setup_logging",
    "get_logger",
    "RunIDFilter",
]
