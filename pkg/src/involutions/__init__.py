# src/involutions/__init__.py
# Involutions and fixed-point-free involutions: statistics, atoms, weak order paths, families

from .involution import (
    Involution,
    FpfInvolution,
    NotInvolutionError,
    NotVexillaryError,
    NotFixedPointFreeError,
    enumerate_involutions,
    enumerate_fpf,
    enumerate_vexillary,
    dom_pq,
)
from .stats import (
    InvStats,
    inv_stats,
    ell_inv,
    visible_descents,
    k_of,
    j_of,
    is_quasi_dominant,
    hat_diagram,
    hat_code,
    shape,
)
from .atoms import alpha_inv, alpha_fpf, binv, binv_sorted, check_binv_fiber, fpf_class, fpf
from .weak_order import DomPath, PathStepError, pq, distinguished_ascent, dominant_ascent, dom_path
from .families import (
    FamilyParameterError,
    igrassmannian,
    t_family,
    g_family,
    w_family,
    g_pair_family,
    special_family,
)
from .arcs import FORBIDDEN_ARC_PATTERNS, is_vexillary_arc

__all__ = [
    "Involution",
    "FpfInvolution",
    "NotInvolutionError",
    "NotVexillaryError",
    "NotFixedPointFreeError",
    "enumerate_involutions",
    "enumerate_fpf",
    "enumerate_vexillary",
    "dom_pq",
    "InvStats",
    "inv_stats",
    "ell_inv",
    "visible_descents",
    "k_of",
    "j_of",
    "is_quasi_dominant",
    "hat_diagram",
    "hat_code",
    "shape",
    "alpha_inv",
    "alpha_fpf",
    "binv",
    "binv_sorted",
    "check_binv_fiber",
    "fpf_class",
    "fpf",
    "DomPath",
    "PathStepError",
    "pq",
    "distinguished_ascent",
    "dominant_ascent",
    "dom_path",
    "FamilyParameterError",
    "igrassmannian",
    "t_family",
    "g_family",
    "w_family",
    "g_pair_family",
    "special_family",
    "FORBIDDEN_ARC_PATTERNS",
    "is_vexillary_arc",
]
