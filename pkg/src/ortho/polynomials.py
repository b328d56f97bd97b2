# src/ortho/polynomials.py
# Involution and orthogonal Grothendieck polynomials.
#
#   invgroth(z)     sum over B_inv(z) of beta^{l(w) - l_inv(z)} G_w, for any involution
#   ortho_groth(z)  vexillary z only: the product formula on the dominant end of
#                   dom_path(z), pulled back along the path by beta_divdiff
#
# Both are memoized per involution. ortho_groth also stores every intermediate
# involution on the path, so a sweep over I_n mostly reuses earlier work.

from typing import Iterable

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from config import settings
from errors import PreconditionError
from grothendieck import groth
from involutions import Involution, binv, dom_path, ell_inv, is_quasi_dominant, k_of
from logger import get_logger
from permgroup import as_partition, is_symmetric, lehmer_code
from polyring import BETA, MultiPoly, X, beta_divdiff, oplus

logger = get_logger(__name__)

_invgroth_cache = LRUCache(maxsize=settings.engine.cache_size)
_ortho_cache = LRUCache(maxsize=settings.engine.cache_size)


class NotSymmetricError(PreconditionError):
    pass


class NotQuasiDominantError(PreconditionError):
    pass


def clear_cache() -> None:
    _invgroth_cache.clear()
    _ortho_cache.clear()


# ---- product formulas -------------------------------------------------


def _symmetric_cells(lam: Iterable[int]):
    lam = as_partition(lam)
    if not is_symmetric(lam):
        raise NotSymmetricError(f"not symmetric: {lam}")
    return [(i, j) for i, part in enumerate(lam, start=1) for j in range(i, part + 1)]


def invgroth_dominant(lam: Iterable[int]) -> MultiPoly:
    """
    prod_{(i,i) in D_lam} x_i * prod_{(i,j) in D_lam, i<j} (x_i + x_j + beta x_i x_j).
    """
    poly = MultiPoly.constant(1)
    for i, j in _symmetric_cells(lam):
        poly = poly * (X(i) if i == j else oplus(X(i), X(j)))
    return poly


def ortho_dominant(lam: Iterable[int]) -> MultiPoly:
    """
    prod_{(i,j) in D_lam, i<=j} (x_i + x_j + beta x_i x_j).
    """
    poly = MultiPoly.constant(1)
    for i, j in _symmetric_cells(lam):
        poly = poly * oplus(X(i), X(j))
    return poly


def ortho_longest(n: int) -> MultiPoly:
    """
    G^O of the longest element n...21: prod_{1<=i<=j<=n-i} (x_i + x_j + beta x_i x_j).
    """
    poly = MultiPoly.constant(1)
    for i in range(1, n + 1):
        for j in range(i, n - i + 1):
            poly = poly * oplus(X(i), X(j))
    return poly


def two_power_factor(k: int) -> MultiPoly:
    """
    prod_{i=1}^{k} (2 + beta x_i).
    """
    poly = MultiPoly.constant(1)
    for i in range(1, k + 1):
        poly = poly * (2 + BETA * X(i))
    return poly


# ---- involution Grothendieck polynomials ------------------------------


@cached(cache=_invgroth_cache, key=lambda z: hashkey(z.cycles))
def invgroth(z: Involution) -> MultiPoly:
    base = ell_inv(z)
    total = MultiPoly()
    for w in binv(z):
        total = total + MultiPoly.beta(w.length() - base) * groth(w)
    return total


def invgroth_recursion_holds(z: Involution, i: int) -> bool:
    """
    beta_divdiff(i, G^_z) is G^_{z s_i} when z(i) = i+1, G^_{s_i z s_i} for any
    other descent i, and -beta G^_z when i is not a descent.
    """
    lhs = beta_divdiff(i, invgroth(z))
    if not z.perm.has_right_descent(i):
        return lhs == -BETA * invgroth(z)
    if z(i) == i + 1:
        return lhs == invgroth(z.times_simple(i))
    return lhs == invgroth(z.conjugate(i))


# ---- orthogonal Grothendieck polynomials ------------------------------


def ortho_groth(z: Involution) -> MultiPoly:
    """
    G^O_z for vexillary z.

    Raises:
        NotVexillaryError: if z contains 2143
        PathStepError: if the path to dom_pq takes a step that is not a vexillary weak order edge
    """
    z.require_vexillary()
    hit = _ortho_cache.get(z.cycles)
    if hit is not None:
        return hit

    path = dom_path(z)
    chain = [z] + [inv for _, inv in path.steps]
    indices = path.indices

    # first point of the path that is already known or dominant
    start = next(
        t for t, y in enumerate(chain)
        if y.cycles in _ortho_cache or y.is_dominant()
    )
    poly = _ortho_cache.get(chain[start].cycles)
    if poly is None:
        poly = ortho_dominant(lehmer_code(chain[start].perm))
        _ortho_cache[chain[start].cycles] = poly
    for t in range(start, 0, -1):
        # chain[t] = s_i chain[t-1] s_i with i a descent of chain[t]
        poly = beta_divdiff(indices[t - 1], poly)
        _ortho_cache[chain[t - 1].cycles] = poly
    logger.debug(f"ortho_groth {z.render()}: {start} divided differences from {chain[start].render()}")
    return poly


def orthogonal_recursion_applies(z: Involution, i: int) -> bool:
    y = z.conjugate(i)
    return y != z and y.is_vexillary() and z.is_vexillary()


def orthogonal_recursion_holds(z: Involution, i: int) -> bool:
    """
    beta_divdiff(i, G^O_z) is G^O_{s_i z s_i} for a descent i and -beta G^O_z otherwise,
    whenever s_i z s_i is vexillary and differs from z.
    """
    if not orthogonal_recursion_applies(z, i):
        raise PreconditionError(f"the orthogonal recursion does not apply to {z.render()} at {i}")
    lhs = beta_divdiff(i, ortho_groth(z))
    if z.perm.has_right_descent(i):
        return lhs == ortho_groth(z.conjugate(i))
    return lhs == -BETA * ortho_groth(z)


def qd_formula(z: Involution) -> MultiPoly:
    """
    G^_z * prod_{i=1}^{k(z)} (2 + beta x_i) for quasi-dominant z.
    """
    z.require_vexillary()
    if not is_quasi_dominant(z):
        raise NotQuasiDominantError(f"not quasi-dominant: {z.render()}")
    return invgroth(z) * two_power_factor(k_of(z))
