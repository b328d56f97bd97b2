# src/tracking/__init__.py
# Run tracking shared by the CLI, the scripts, the sweep runner and its worker processes

from tracking.run_id import (
    Run,
    adopt_run,
    current_run,
    generate_run_id,
    get_run_id,
    run_context,
)

__all__ = [
    "Run",
    "adopt_run",
    "current_run",
    "generate_run_id",
    "get_run_id",
    "run_context",
]
