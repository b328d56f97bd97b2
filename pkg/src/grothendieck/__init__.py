# src/grothendieck/__init__.py
# Grothendieck polynomials, basis expansions, transition and Pieri formulas

from .polynomials import groth, groth_from_top, groth_oracle, dominant_monomial, longest_element, clear_cache
from .expansion import GrothExpansion, NormalizationError, expand
from .transition import (
    PieriChain,
    lenart_transition,
    one_row_transition,
    pieri_chains,
    pieri_targets,
    pieri_chain,
    lensot_product,
    vertical_strips,
    grassmannian_pieri,
    two_power_product,
)
from .symplectic import symp_groth

__all__ = [
    "groth",
    "groth_from_top",
    "groth_oracle",
    "dominant_monomial",
    "longest_element",
    "clear_cache",
    "GrothExpansion",
    "NormalizationError",
    "expand",
    "PieriChain",
    "lenart_transition",
    "one_row_transition",
    "pieri_chains",
    "pieri_targets",
    "pieri_chain",
    "lensot_product",
    "vertical_strips",
    "grassmannian_pieri",
    "two_power_product",
    "symp_groth",
]
