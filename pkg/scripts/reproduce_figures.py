#!/usr/bin/env python3
"""
Export every B_inv^+ figure digraph as DOT and JSON.

Writes <name>.dot and <name>.json for each figure into the output directory.
Render the DOT files with graphviz, e.g. `dot -Tpdf t14.dot -o t14.pdf`.

Usage:
    python scripts/reproduce_figures.py --out figures/
    python scripts/reproduce_figures.py --out figures/ --only w0_4
"""

import argparse
import os
import sys

# Add src directory to path so we can import our modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from harness import binv_plus_dot, binv_plus_json
from harness.export import dumps, write_text
from involutions import Involution, g_family, g_pair_family, t_family
from logger import get_logger
from permgroup import Permutation
from tracking import run_context

logger = get_logger(__name__)


def figures():
    """
    Figure name -> involution, in the order they are exported.
    """
    return {
        "t14": t_family(4),
        "g3": g_family(3),
        "w0_4": Involution.from_permutation(Permutation([4, 3, 2, 1])),
        "g23": g_pair_family(2, 3),
        "g24": g_pair_family(2, 4),
    }


def main():
    parser = argparse.ArgumentParser(description="Export the B_inv^+ figure digraphs")
    parser.add_argument("--out", default="figures", help="output directory (default: figures)")
    parser.add_argument("--only", action="append", default=None, help="export only this figure (repeatable)")
    args = parser.parse_args()

    selected = figures()
    if args.only:
        unknown = sorted(set(args.only) - set(selected))
        if unknown:
            parser.error(f"unknown figure(s) {unknown}, expected {sorted(selected)}")
        selected = {name: z for name, z in selected.items() if name in args.only}

    os.makedirs(args.out, exist_ok=True)
    with run_context("figures"):
        for name, z in selected.items():
            logger.info(f"Exporting {name}: {z.render()}")
            write_text(os.path.join(args.out, f"{name}.dot"), binv_plus_dot(z))
            write_text(os.path.join(args.out, f"{name}.json"), dumps(binv_plus_json(z)))

    logger.info(f"✓ {len(selected)} figures written to {args.out}")


if __name__ == "__main__":
    main()
