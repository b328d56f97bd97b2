#!/usr/bin/env python3
"""
Long-running census jobs: the n = 7, 8 rows of the w_0 value table and the
support/B_inv^+ equality census on S_8.

Enables the long-run switch, streams progress to stderr and writes the tables
as JSON.

Usage:
    python scripts/run_census.py equality_census --n 8 --jobs 8 --out census_s8.json
    python scripts/run_census.py values_table --n 8
"""

import argparse
import os
import sys

# Add src directory to path so we can import our modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from config import settings
from harness import run_census
from harness.census import KINDS
from harness.export import dumps, write_text
from logger import get_logger
from metrics import write_metrics
from tracking import run_context

logger = get_logger(__name__)


def main():
    parser = argparse.ArgumentParser(description="Run a long census job")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--out", default=None, help="write JSON here instead of stdout")
    parser.add_argument("--metrics-out", default=None)
    args = parser.parse_args()

    settings.sweep.long_run = True
    settings.sweep.jobs = args.jobs

    logger.info("=" * 60)
    logger.info(f"Census {args.kind} n={args.n} with {args.jobs} workers")
    logger.info("=" * 60)

    with run_context(f"census {args.kind}") as run:
        table = run_census(args.kind, args.n, jobs=args.jobs)
        logger.info(f"✓ Census finished in {run.elapsed():.1f}s")

    text = dumps(table.to_json())
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    if args.metrics_out:
        write_metrics(args.metrics_out)


if __name__ == "__main__":
    main()
