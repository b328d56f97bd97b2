# src/main.py
# Entry point of the command-line tool.
#
#   python src/main.py compute gco --z "(1,3)"
#   python src/main.py verify b+conj --n-max 6 --jobs 4
#   python src/main.py census values_table --n 6
#   python src/main.py export binv_plus_dot --z "(1,4)" --out t14.dot
#
# Exit codes: 0 ok, 1 verification failure or mathematical precondition,
# 2 usage error, 3 internal invariant breach.

import sys

from config import settings
from logger import get_logger

from harness import main as run_cli

logger = get_logger(__name__)


def main(argv=None) -> int:
    logger.debug("=" * 60)
    logger.debug("Grothendieck polynomial toolkit")
    logger.debug(f"Environment: {settings.app.environment}")
    logger.debug(f"Step budget override: {settings.engine.step_budget}")
    logger.debug("=" * 60)

    try:
        return run_cli(argv)
    except KeyboardInterrupt:
        logger.warning("Interrupted, pending work cancelled")
        return 130


if __name__ == "__main__":
    sys.exit(main())
