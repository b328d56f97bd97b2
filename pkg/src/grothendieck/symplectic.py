# src/grothendieck/symplectic.py
# Symplectic Grothendieck polynomials of fixed-point-free involutions

from typing import Tuple

from involutions import FpfInvolution, fpf
from logger import get_logger
from polyring import MultiPoly
from grothendieck.expansion import GrothExpansion
from grothendieck.polynomials import groth

logger = get_logger(__name__)


def symp_groth(z: FpfInvolution) -> Tuple[MultiPoly, GrothExpansion]:
    """
    G^Sp_z = sum of beta^{l(w) - l_fpf(z)} G_w over the class of alpha_fpf(z).
    """
    alpha, atoms = fpf(z)
    base = alpha.length()
    expansion = GrothExpansion({w: MultiPoly.beta(w.length() - base) for w in atoms})
    poly = MultiPoly()
    for w, c in expansion.items():
        poly = poly + c * groth(w)
    logger.debug(f"symp_groth {z.render()}: {len(atoms)} atoms, base length {base}")
    return poly, expansion
