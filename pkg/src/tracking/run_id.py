# src/tracking/run_id.py
# A run is one CLI invocation or one script execution. The active run lives in a
# ContextVar so the logging filter can stamp its id on every record; worker
# processes adopt the parent's run through the pool initializer.

import time
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Iterator, Optional


@dataclass(frozen=True)
class Run:
    """
    Identity of the active run. Picklable, so it can be handed to worker processes.
    """
    run_id: str
    label: str = "-"
    started: float = field(default_factory=time.time)

    def elapsed(self) -> float:
        return time.time() - self.started


_current: ContextVar[Optional[Run]] = ContextVar("run", default=None)


def generate_run_id() -> str:
    """
    "run-" followed by 16 hex characters.
    """
    return f"run-{uuid.uuid4().hex[:16]}"


def current_run() -> Optional[Run]:
    return _current.get()


def get_run_id() -> Optional[str]:
    run = _current.get()
    return run.run_id if run else None


def adopt_run(run: Optional[Run]) -> None:
    """
    Make `run` the active run of this process (worker initializers call this).
    """
    _current.set(run)


@contextmanager
def run_context(label: str = "-", run_id: Optional[str] = None) -> Iterator[Run]:
    """
    Activate a new run for the enclosed block; the previous run is restored on exit.

    Example:
        with run_context("verify") as run:
            report = run_sweep("qd-thm", 5)
            logger.info(f"{run.run_id} took {run.elapsed():.2f}s")
    """
    run = Run(run_id=run_id or generate_run_id(), label=label)
    token = _current.set(run)
    try:
        yield run
    finally:
        _current.reset(token)
