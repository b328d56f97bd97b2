# src/polyring/__init__.py
# Exact sparse polynomial ring Z[beta][x_1, x_2, ...] and its operators

from .multipoly import MultiPoly, ZERO, ONE, BETA, X, trim_exps
from .operators import (
    DivisionRemainderError,
    arith,
    act_si,
    divdiff,
    beta_divdiff,
    isobaric,
    oplus,
    shift_down_poly,
    shift_up_poly,
    truncate_vars,
    specialize_beta,
    graded_degree,
    is_symmetric_in,
)

__all__ = [
    "MultiPoly",
    "ZERO",
    "ONE",
    "BETA",
    "X",
    "trim_exps",
    "DivisionRemainderError",
    "arith",
    "act_si",
    "divdiff",
    "beta_divdiff",
    "isobaric",
    "oplus",
    "shift_down_poly",
    "shift_up_poly",
    "truncate_vars",
    "specialize_beta",
    "graded_degree",
    "is_symmetric_in",
]
