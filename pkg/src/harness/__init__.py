# src/harness/__init__.py
# Verification sweeps, census tables, exports and the command-line surface

from .report import Failure, SweepReport, CensusTable
from .sweeps import SWEEPS, Sweep, get_sweep, run_sweep
from .census import equality_census, lnc_counts, longest_involution, run_census, values_table, w0_values
from .export import binv_plus_dot, binv_plus_json, export_text, poly_json, shiftable_json
from .cli import COMMANDS, build_parser, main

__all__ = [
    "Failure",
    "SweepReport",
    "CensusTable",
    "SWEEPS",
    "Sweep",
    "get_sweep",
    "run_sweep",
    "equality_census",
    "lnc_counts",
    "longest_involution",
    "run_census",
    "values_table",
    "w0_values",
    "binv_plus_dot",
    "binv_plus_json",
    "export_text",
    "poly_json",
    "shiftable_json",
    "COMMANDS",
    "build_parser",
    "main",
]
