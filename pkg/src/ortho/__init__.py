# src/ortho/__init__.py
# Involution and orthogonal Grothendieck polynomials, GC^O coefficients, shiftable
# sets, B_inv^+ digraphs, stable limits and closed forms

from .polynomials import (
    NotSymmetricError,
    NotQuasiDominantError,
    clear_cache,
    invgroth,
    invgroth_dominant,
    invgroth_recursion_holds,
    ortho_dominant,
    ortho_longest,
    ortho_groth,
    orthogonal_recursion_applies,
    orthogonal_recursion_holds,
    qd_formula,
    two_power_factor,
)
from .coefficients import NegativeCoefficientError, gco, gc_values, dom_thm_gco
from .shiftable import (
    LeftSegment,
    ShiftableSet,
    ShiftableData,
    left_segments,
    crossing_bounds,
    is_locally_noncrossing,
    varpi,
    theta,
    shiftable_data,
    ivex_formula,
)
from .binv_plus import BinvPlus, binv_plus, binv_plus_data, chain_step_filter, left_weak_graph, support_matches
from .grassmannian import IGrassTerm, igrass_expansion, igrass_formula
from .stable import (
    shift_expansion,
    shift_invariant,
    stable_truncation,
    stable_limit,
    gq_from_gco,
    gq_from_shiftable,
    almost_expansion,
    almost_shifts,
    stab_operator,
    gp_stab_check,
)
from .closed_forms import (
    FAMILIES,
    WijReport,
    closed_forms,
    closed_form_involution,
    closed_form_holds,
    from_inverse_word,
    odd_left_descents,
    g2n_u_max,
    predicted_binv,
    predicted_binv_plus,
    predicted_binv_plus_longest,
    wij_report,
)

__all__ = [
    "NotSymmetricError",
    "NotQuasiDominantError",
    "clear_cache",
    "invgroth",
    "invgroth_dominant",
    "invgroth_recursion_holds",
    "ortho_dominant",
    "ortho_longest",
    "ortho_groth",
    "orthogonal_recursion_applies",
    "orthogonal_recursion_holds",
    "qd_formula",
    "two_power_factor",
    "NegativeCoefficientError",
    "gco",
    "gc_values",
    "dom_thm_gco",
    "LeftSegment",
    "ShiftableSet",
    "ShiftableData",
    "left_segments",
    "crossing_bounds",
    "is_locally_noncrossing",
    "varpi",
    "theta",
    "shiftable_data",
    "ivex_formula",
    "BinvPlus",
    "binv_plus",
    "binv_plus_data",
    "chain_step_filter",
    "left_weak_graph",
    "support_matches",
    "IGrassTerm",
    "igrass_expansion",
    "igrass_formula",
    "shift_expansion",
    "shift_invariant",
    "stable_truncation",
    "stable_limit",
    "gq_from_gco",
    "gq_from_shiftable",
    "almost_expansion",
    "almost_shifts",
    "stab_operator",
    "gp_stab_check",
    "FAMILIES",
    "WijReport",
    "closed_forms",
    "closed_form_involution",
    "closed_form_holds",
    "from_inverse_word",
    "odd_left_descents",
    "g2n_u_max",
    "predicted_binv",
    "predicted_binv_plus",
    "predicted_binv_plus_longest",
    "wij_report",
]
