# src/metrics/__init__.py
# Prometheus metric objects plus a helper to dump them to a textfile

from prometheus_client import REGISTRY, write_to_textfile

from .metrics import (
    COMPUTE_REQUESTS_TOTAL,
    SWEEP_CASES_TOTAL,
    SWEEP_FAILURES_TOTAL,
    SWEEP_DURATION_SECONDS,
    EXPANSION_STEPS_TOTAL,
)


def write_metrics(path: str) -> None:
    """
    Write the default registry to `path` in Prometheus text format.
    """
    write_to_textfile(path, REGISTRY)


__all__ = [
    "COMPUTE_REQUESTS_TOTAL",
    "SWEEP_CASES_TOTAL",
    "SWEEP_FAILURES_TOTAL",
    "SWEEP_DURATION_SECONDS",
    "EXPANSION_STEPS_TOTAL",
    "write_metrics",
]
