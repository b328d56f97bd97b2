# src/logger/logging.py
# Centralized logging configuration.
# Logs go to stderr: stdout is reserved for computed output (polynomials, JSON, DOT)
# so that CLI results can be piped or redirected without log noise.

import logging
import sys
from typing import Optional


class RunIDFilter(logging.Filter):
    """
    Logging filter that stamps every record with the current run ID.
    """

    def filter(self, record):
        try:
            from tracking.run_id import get_run_id
            run_id = get_run_id()
            record.run_id = run_id if run_id else "-"
        except (ImportError, Exception):
            record.run_id = "-"

        return True


def setup_logging(level: Optional[str] = None):
    """
    Configure the root logger once.

    Args:
        level: DEBUG, INFO, WARNING, ERROR or CRITICAL.
               If None, uses settings.app.log_level.
    """
    try:
        from config import settings
        log_level = level or settings.app.log_level
    except ImportError:
        log_level = level or "INFO"

    numeric_level = getattr(logging, log_level.upper(), logging.INFO)

    formatter = logging.Formatter(
        '%(asctime)s - [%(run_id)s] - %(name)s - %(levelname)s - %(message)s'
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    handler.addFilter(RunIDFilter())

    # force=True lets the CLI re-apply a --log-level override after import
    logging.basicConfig(
        level=numeric_level,
        handlers=[handler],
        force=True,
    )


def get_logger(name: Optional[str] = None):
    """
    Get a logger for a module. Call with __name__.
    """
    return logging.getLogger(name)


# Configure logging as soon as the package is imported
setup_logging()
