# src/errors/__init__.py
# Exception families and their exit codes

from .exceptions import GrothError, UsageError, PreconditionError, InvariantBreach

__all__ = [
    "GrothError",
    "UsageError",
    "PreconditionError",
    "InvariantBreach",
]
