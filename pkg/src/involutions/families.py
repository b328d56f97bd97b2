# src/involutions/families.py
# Named involutions: I-Grassmannian <mu|n>, t_n, g_n, w_ij, dom_pq, g_ij

from typing import Iterable

from errors import PreconditionError, UsageError
from involutions.involution import Involution, dom_pq
from permgroup import as_strict_partition


class FamilyParameterError(UsageError):
    pass


def igrassmannian(mu: Iterable[int], n: int) -> Involution:
    """
    <mu|n> = (n+1-mu_1, n+1)(n+1-mu_2, n+2)...; <()|n> is the identity.
    """
    mu = as_strict_partition(mu)
    if n < 1:
        raise FamilyParameterError(f"n must be positive, got {n}")
    if mu and mu[0] > n:
        raise PreconditionError(f"part too large: {mu[0]} > {n}")
    return Involution((n + 1 - part, n + r) for r, part in enumerate(mu, start=1))


def t_family(n: int) -> Involution:
    """
    t_n = (1, n).
    """
    if n < 2:
        raise FamilyParameterError(f"t_n needs n >= 2, got {n}")
    return Involution([(1, n)])


def g_family(n: int) -> Involution:
    """
    g_n = (1, n+1)(2, n+2)...(n, 2n).
    """
    if n < 1:
        raise FamilyParameterError(f"g_n needs n >= 1, got {n}")
    return Involution((i, n + i) for i in range(1, n + 1))


def w_family(i: int, j: int) -> Involution:
    """
    w_ij = (i, j)(i+1, j-1)...(i+k, j-k), k = floor((j-i-1)/2).
    """
    if not 1 <= i < j:
        raise FamilyParameterError(f"w_ij needs 1 <= i < j, got ({i},{j})")
    k = (j - i - 1) // 2
    return Involution((i + t, j - t) for t in range(k + 1))


def g_pair_family(i: int, j: int) -> Involution:
    """
    g_ij = (i, j+1)(i+1, j+2)...(j, 2j-i+1) = <(m, m-1, ..., 1)|j>, m = j-i+1.
    """
    if not 0 < i < j:
        raise FamilyParameterError(f"g_ij needs 0 < i < j, got ({i},{j})")
    return Involution((i + t, j + 1 + t) for t in range(j - i + 1))


def special_family(kind: str, *params: int) -> Involution:
    """
    Dispatch by family name: t_n(n), g_n(n), w_ij(i, j), dom_pq(p, q), g_ij(i, j).
    """
    builders = {
        "t_n": (t_family, 1),
        "g_n": (g_family, 1),
        "w_ij": (w_family, 2),
        "dom_pq": (dom_pq, 2),
        "g_ij": (g_pair_family, 2),
    }
    if kind not in builders:
        raise FamilyParameterError(f"unknown involution family '{kind}'")
    builder, arity = builders[kind]
    if len(params) != arity:
        raise FamilyParameterError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)

