# src/polyring/operators.py
# Symmetric group action and divided difference operators on Z[beta][x_1, x_2, ...].
#
#   act_si(i, f)        swap x_i and x_{i+1}
#   divdiff(i, f)       (f - s_i f) / (x_i - x_{i+1})
#   beta_divdiff(i, f)  divdiff(i, (1 + beta x_{i+1}) f)
#   isobaric(i, f)      beta_divdiff(i, x_i f)
#   oplus(f, g)         f + g + beta f g
#
# plus the shift maps x_i -> x_{i-1} / x_{i+1}, truncation to finitely many
# variables and integer specializations of beta.

from typing import Dict, Optional, Union

from errors import InvariantBreach, UsageError
from logger import get_logger
from polyring.multipoly import BETA, Key, MultiPoly, X, trim_exps

logger = get_logger(__name__)


class DivisionRemainderError(InvariantBreach):
    """
    Raised when a divided difference quotient does not multiply back to f - s_i f.
    """
    pass


def _check_index(i: int) -> None:
    if i < 1:
        raise UsageError(f"operator index must be positive, got {i}")


def _pad(exps, length: int) -> list:
    padded = list(exps)
    if len(padded) < length:
        padded.extend([0] * (length - len(padded)))
    return padded


def arith(op: str, p: MultiPoly, q: Union[MultiPoly, int]) -> MultiPoly:
    """
    Exact ring arithmetic by name: add, sub, mul or scale.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        if not isinstance(q, int):
            raise UsageError("scale expects an integer factor")
        return p.scale(q)
    raise UsageError(f"unknown arithmetic operation '{op}'")


def act_si(i: int, p: MultiPoly) -> MultiPoly:
    """
    The simple transposition s_i acting by x_i <-> x_{i+1}.
    """
    _check_index(i)

    def swap(b, exps):
        if len(exps) < i:
            return b, exps
        e = _pad(exps, i + 1)
        e[i - 1], e[i] = e[i], e[i - 1]
        return b, e

    return p.map_keys(swap)


def divdiff(i: int, p: MultiPoly) -> MultiPoly:
    """
    Ordinary divided difference.

    Each monomial x_i^a x_{i+1}^c m (m free of x_i, x_{i+1}) is divided on its own:
    (x_i^a x_{i+1}^c - x_i^c x_{i+1}^a) / (x_i - x_{i+1}) is the geometric sum
    x_i^{a-1} x_{i+1}^c + ... + x_i^c x_{i+1}^{a-1} when a > c, its negative with
    the roles swapped when a < c, and 0 when a == c.
    """
    _check_index(i)
    result: Dict[Key, int] = {}
    for (b, exps), coeff in p.items():
        e = _pad(exps, i + 1)
        a, c = e[i - 1], e[i]
        if a == c:
            continue
        sign = 1 if a > c else -1
        low, high = (c, a) if a > c else (a, c)
        # terms x_i^{high-1-t} x_{i+1}^{low+t} for t = 0..high-low-1 (a > c)
        for t in range(high - low):
            if a > c:
                e[i - 1], e[i] = high - 1 - t, low + t
            else:
                e[i - 1], e[i] = low + t, high - 1 - t
            key = (b, trim_exps(e))
            result[key] = result.get(key, 0) + sign * coeff
    quotient = MultiPoly._wrap({k: v for k, v in result.items() if v})

    from config import settings
    if settings.engine.verify_division:
        _verify_quotient(i, p, quotient)
    return quotient


def _verify_quotient(i: int, p: MultiPoly, quotient: MultiPoly) -> None:
    if (X(i) - X(i + 1)) * quotient != p - act_si(i, p):
        logger.error(f"divdiff({i}) remainder check failed on a {len(p)}-term polynomial")
        raise DivisionRemainderError(f"divided difference by x{i} - x{i + 1} left a remainder")


def beta_divdiff(i: int, p: MultiPoly) -> MultiPoly:
    """
    K-theoretic divided difference: divdiff(i, (1 + beta x_{i+1}) p).
    """
    _check_index(i)

    def times_beta_x(b, exps):
        e = _pad(exps, i + 1)
        e[i] += 1
        return b + 1, e

    return divdiff(i, p + p.map_keys(times_beta_x))


def isobaric(i: int, p: MultiPoly) -> MultiPoly:
    """
    Isobaric divided difference pi_i(p) = beta_divdiff(i, x_i p).
    """
    _check_index(i)
    return beta_divdiff(i, X(i) * p)


def oplus(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """
    Formal group law p + q + beta p q.
    """
    return p + q + BETA * p * q


def shift_down_poly(p: MultiPoly) -> MultiPoly:
    """
    Ring map x_1 -> 0, x_{i+1} -> x_i. Terms containing x_1 vanish.
    """
    def down(b, exps):
        if exps and exps[0] > 0:
            return None
        return b, exps[1:]

    return p.map_keys(down)


def shift_up_poly(p: MultiPoly) -> MultiPoly:
    """
    Ring map x_i -> x_{i+1}.
    """
    return p.map_keys(lambda b, exps: (b, (0,) + exps if exps else ()))


def truncate_vars(p: MultiPoly, n: int) -> MultiPoly:
    """
    Set x_{n+1} = x_{n+2} = ... = 0.
    """
    if n < 0:
        raise UsageError(f"number of variables must be nonnegative, got {n}")
    return p.map_keys(lambda b, exps: None if any(exps[n:]) else (b, exps[:n]))


def specialize_beta(p: MultiPoly, value: int) -> MultiPoly:
    """
    Substitute an integer for beta. value=0 gives the Schubert-type specialization.
    """
    result: Dict[Key, int] = {}
    for (b, exps), c in p.items():
        weight = c * value ** b if b else c
        if weight:
            key = (0, exps)
            result[key] = result.get(key, 0) + weight
    return MultiPoly._wrap({k: v for k, v in result.items() if v})


def graded_degree(p: MultiPoly) -> Optional[int]:
    """
    Common value of (sum of x exponents) - (beta exponent) over all terms,
    or None if terms disagree (or p is zero).
    """
    degrees = {sum(exps) - b for b, exps in p.terms}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def is_symmetric_in(p: MultiPoly, n: int) -> bool:
    """
    True if p is invariant under s_1, ..., s_{n-1}.
    """
    return all(act_si(i, p) == p for i in range(1, n))
