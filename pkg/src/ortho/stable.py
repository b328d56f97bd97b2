# src/ortho/stable.py
# Shift invariance and stable limits.
#
# GQ_z and GP_z are the limits of G^O_{1^n x z} and G^_{1^n x z} as n grows. The
# functions here work with their truncations to x_1..x_m, which stop changing once
# n is large enough; stable_limit() declares a truncation stable as soon as two
# consecutive shifts agree.

from typing import Optional, Tuple

from errors import PreconditionError, UsageError
from grothendieck import GrothExpansion, groth
from involutions import Involution, igrassmannian
from logger import get_logger
from permgroup import NotShiftableError, Permutation, one_times, shift_down
from polyring import MultiPoly, isobaric, truncate_vars
from resilience import StepBudget, StepBudgetConfig
from ortho.coefficients import gco
from ortho.grassmannian import igrass_expansion
from ortho.polynomials import invgroth, ortho_groth
from ortho.shiftable import shiftable_data

logger = get_logger(__name__)

KINDS = ("GQ", "GP")


def shift_expansion(expansion: GrothExpansion, direction: str, n: int = 1) -> GrothExpansion:
    """
    "up" relabels G_w as G_{1^n x w}; "down" relabels G_w as G_{w down n} and
    drops the terms whose index moves one of 1..n.
    """
    if direction == "up":
        return expansion.map_indices(lambda w: one_times(w, n))
    if direction == "down":
        def down(w: Permutation) -> Optional[Permutation]:
            try:
                return shift_down(w, n)
            except NotShiftableError:
                return None
        return expansion.map_indices(down)
    raise UsageError(f"unknown shift direction '{direction}'")


def shift_invariant(z: Involution) -> bool:
    """
    Whether GC^O_{1 x z} is GC^O_z shifted up.
    """
    return gco(z.one_times(1)) == shift_expansion(gco(z), "up")


def _shifted_polynomial(z: Involution, kind: str, steps: int) -> MultiPoly:
    if kind == "GQ":
        return ortho_groth(z.one_times(steps))
    if kind == "GP":
        return invgroth(z.one_times(steps))
    raise UsageError(f"unknown stable family '{kind}', expected one of {KINDS}")


def stable_truncation(z: Involution, kind: str, steps: int, num_vars: int) -> MultiPoly:
    """
    G^O_{1^steps x z} (kind "GQ") or G^_{1^steps x z} (kind "GP") with x_i = 0 for i > num_vars.
    """
    if steps < 0 or num_vars < 0:
        raise UsageError(f"steps and num_vars must be nonnegative, got {steps}, {num_vars}")
    return truncate_vars(_shifted_polynomial(z, kind, steps), num_vars)


def stable_limit(z: Involution, kind: str, num_vars: int, max_steps: int = 12) -> Tuple[MultiPoly, int]:
    """
    The truncation of GQ_z or GP_z to num_vars variables and the first shift
    at which it was reached.

    Raises:
        StepBudgetExceeded: if no two consecutive shifts agree within max_steps
    """
    budget = StepBudget("stable_limit", StepBudgetConfig(max_steps=max_steps))
    steps = 0
    current = stable_truncation(z, kind, steps, num_vars)
    while True:
        budget.record_step()
        following = stable_truncation(z, kind, steps + 1, num_vars)
        if following == current:
            logger.debug(f"{kind} limit of {z.render()} in {num_vars} variables stable after {steps} shifts")
            return current, steps
        current = following
        steps += 1


def gq_from_gco(z: Involution, steps: int, num_vars: int) -> MultiPoly:
    """
    sum_w GC^O_z(w) beta^{l(w) - l_inv(z)} G_{1^steps x w}, truncated. Equal to the
    GQ truncation of z with the same shift whenever z(1) = 1.
    """
    shifted = shift_expansion(gco(z), "up", steps)
    total = MultiPoly()
    for w, c in shifted.items():
        total = total + c * truncate_vars(groth(w), num_vars)
    return total


def gq_from_shiftable(z: Involution, steps: int, num_vars: int) -> MultiPoly:
    """
    sum over shiftable S of theta_S beta^{|S|} G^_{1^steps x (sigma_S^{-1} z sigma_S)}, truncated.
    Equal to the GQ truncation once steps >= num_vars.
    """
    total = MultiPoly()
    for entry in shiftable_data(z).sets:
        term = MultiPoly.beta(len(entry), entry.theta)
        total = total + term * stable_truncation(entry.conjugate, "GP", steps, num_vars)
    return total


def almost_shifts(mu, n: int, num_vars: int) -> int:
    """
    Fewest shifts after which every varpi variable x_{n+shifts+1-mu_i} lies beyond
    num_vars and every lam with lam_1 = mu_1 + 1 fits.
    """
    mu = tuple(mu)
    top = mu[0] if mu else 0
    return max(1, num_vars + top - n)


def almost_expansion(mu, n: int, steps: int, num_vars: int) -> MultiPoly:
    """
    sum over lam in the I-Grassmannian expansion of <mu|n+steps> of
        (-1)^{cols} 2^{l(mu) - |lam/mu|} (-beta)^{|lam/mu|} G^_{<lam|n+steps>}, truncated.

    1^steps x <mu|n> = <mu|n+steps>, so once steps >= almost_shifts(mu, n, num_vars)
    this equals the GQ truncation with the same shift, and both sides agree with
    their limits GQ_mu and sum of GP_lam.
    """
    size = n + steps
    total = MultiPoly()
    for term in igrass_expansion(mu, size):
        weight = MultiPoly.beta(term.beta_pow, term.sign * term.almost_weight)
        total = total + weight * truncate_vars(invgroth(term.involution(size)), num_vars)
    return total


def stab_operator(n: int, p: MultiPoly) -> MultiPoly:
    """
    pi_{2->1} pi_{3->1} ... pi_{n->1} p, with pi_{b->1} = pi_{b-1} ... pi_1
    and pi_i the isobaric divided difference. The rightmost factor acts first.
    """
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    for b in range(n, 1, -1):
        for i in range(1, b):
            p = isobaric(i, p)
    return p


def gp_stab_check(mu, n: int) -> bool:
    """
    Whether stab_n applied to G^_{<mu|n>} gives GP_{<mu|n>} in n variables.
    """
    z = igrassmannian(mu, n)
    if z.is_identity():
        raise PreconditionError("gp_stab_check needs a nonempty partition")
    limit, _ = stable_limit(z, "GP", n)
    return stab_operator(n, invgroth(z)) == limit
