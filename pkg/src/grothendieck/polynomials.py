# src/grothendieck/polynomials.py
# Grothendieck polynomials G_w in Z[beta][x_1, x_2, ...].
#
# Three routes, all exact and all required to agree:
#   groth(w)           memoized: x^{c(w)} for dominant w, otherwise
#                      G_w = beta_divdiff(i, G_{w s_i}) for the first ascent i of w
#   groth_from_top     the literal w_0 route: start from x_1^{n-1} ... x_{n-1} and
#                      apply beta_divdiff along a reduced word of w^{-1} w_0
#   groth_oracle       bounded compatible sequences over Hecke words

from functools import lru_cache
from typing import Optional

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from config import settings
from errors import UsageError
from logger import get_logger
from permgroup import Permutation, bruhat_leq, demazure_simple, is_dominant, lehmer_code, reduced_word
from polyring import MultiPoly, ONE, beta_divdiff

logger = get_logger(__name__)

_groth_cache = LRUCache(maxsize=settings.engine.cache_size)


def dominant_monomial(w: Permutation) -> MultiPoly:
    """
    x^{c(w)}; equals G_w when w is dominant.
    """
    return MultiPoly.monomial(lehmer_code(w))


def _first_ascent(w: Permutation) -> int:
    window = w.window
    for i in range(1, len(window)):
        if window[i - 1] < window[i]:
            return i
    raise ValueError(f"{w.render()} has no ascent inside its window")


@cached(cache=_groth_cache, key=lambda w: hashkey(w.window))
def groth(w: Permutation) -> MultiPoly:
    """
    The Grothendieck polynomial G_w.
    """
    if is_dominant(w):
        return dominant_monomial(w)
    i = _first_ascent(w)
    return beta_divdiff(i, groth(w.times_simple(i)))


def clear_cache() -> None:
    _groth_cache.clear()


def longest_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def groth_from_top(w: Permutation, n: Optional[int] = None) -> MultiPoly:
    """
    G_w computed inside S_n from G_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
    """
    n = max(w.size, 1) if n is None else n
    if n < w.size:
        raise UsageError(f"{w.render()} does not lie in S_{n}")
    w0 = longest_element(n)
    poly = MultiPoly.monomial(range(n - 1, 0, -1))
    # w_0 = w s_{a_1} ... s_{a_k}, so G_w = d_{a_1} ... d_{a_k} G_{w_0}
    for a in reversed(reduced_word(w.inverse() * w0)):
        poly = beta_divdiff(a, poly)
    return poly


def groth_oracle(w: Permutation) -> MultiPoly:
    """
    Sum of beta^{len(a) - l(w)} x^i over bounded compatible sequences (a, i):
    a a Hecke word for w, i weakly increasing with i_t <= a_t, and i_t < i_{t+1}
    whenever a_t <= a_{t+1}.
    """
    n = max(w.size, 2)
    target_length = w.length()

    @lru_cache(maxsize=None)
    def completions(current: Permutation, last_a: int, last_i: int) -> MultiPoly:
        # beta counts letters, x_i records the compatible index
        total = ONE if current == w else MultiPoly()
        for a in range(1, n):
            nxt = demazure_simple(current, a)
            if not bruhat_leq(nxt, w):
                continue
            low = last_i + 1 if last_a <= a else last_i
            for i in range(max(low, 1), a + 1):
                step = MultiPoly.monomial([0] * (i - 1) + [1], beta_exp=1)
                total = total + step * completions(nxt, a, i)
        return total

    # last_a = n makes the first letter unconstrained (a < n always)
    raw = completions(Permutation.identity(), n, 1)
    return raw.map_keys(lambda b, exps: (b - target_length, exps))
