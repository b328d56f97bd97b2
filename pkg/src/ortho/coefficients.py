# src/ortho/coefficients.py
# Expansion of G^O_z in the Grothendieck basis.
#
# gco() expands the polynomial directly. dom_thm_gco() computes the same
# coefficients for quasi-dominant z from k(z)-Pieri chains out of B_inv(z),
# without ever building G^O_z.

from typing import Dict

from errors import InvariantBreach
from grothendieck import GrothExpansion, expand, pieri_targets
from involutions import Involution, binv, ell_inv, is_quasi_dominant, k_of
from logger import get_logger
from permgroup import Permutation
from ortho.polynomials import NotQuasiDominantError, ortho_groth

logger = get_logger(__name__)

ValueMap = Dict[Permutation, int]


class NegativeCoefficientError(InvariantBreach):
    pass


def gco(z: Involution) -> GrothExpansion:
    """
    The expansion sum_w GC^O_z(w) beta^{l(w) - l_inv(z)} G_w.

    Raises:
        NormalizationError: if some coefficient is not a single power of beta
    """
    expansion = expand(ortho_groth(z))
    expansion.normalized(ell_inv(z))
    return expansion


def gc_values(z: Involution) -> ValueMap:
    """
    w -> GC^O_z(w). Every value is a positive integer.
    """
    values = gco(z).normalized(ell_inv(z))
    negative = {w: g for w, g in values.items() if g <= 0}
    if negative:
        w, g = next(iter(sorted(negative.items(), key=lambda kv: kv[0].sort_key())))
        raise NegativeCoefficientError(f"GC^O of {z.render()} at {w.render()} is {g}")
    return values


def dom_thm_gco(z: Involution) -> ValueMap:
    """
    GC^O_z for quasi-dominant z, with k = k(z):
        sum over v in B_inv(z) and unmarked k-Pieri chains v -> w of
        (-1)^{1+F} 2^{k + l(v) - l(w) + P}, the trivial chain counting 2^k.
    """
    z.require_vexillary()
    if not is_quasi_dominant(z):
        raise NotQuasiDominantError(f"not quasi-dominant: {z.render()}")
    k = k_of(z)
    totals: ValueMap = {}
    for v in binv(z):
        if k == 0:
            totals[v] = totals.get(v, 0) + 1
            continue
        for w, chain in pieri_targets(v, k).items():
            if w == v:
                term = 2 ** k
            else:
                exponent = k + v.length() - w.length() + chain.p_stat
                if exponent < 0:
                    raise InvariantBreach(
                        f"chain {list(chain.steps)} from {v.render()} to {w.render()} "
                        f"gives exponent {exponent}"
                    )
                term = (-1) ** (1 + chain.f_stat) * 2 ** exponent
            totals[w] = totals.get(w, 0) + term

    values = {w: g for w, g in totals.items() if g}
    negative = [w for w, g in values.items() if g < 0]
    if negative:
        raise NegativeCoefficientError(
            f"chain formula for {z.render()} gives {values[negative[0]]} at {negative[0].render()}"
        )
    logger.debug(f"dom_thm_gco {z.render()}: {len(values)} terms from {len(binv(z))} atoms, k={k}")
    return values
