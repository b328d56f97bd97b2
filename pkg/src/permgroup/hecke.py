# src/permgroup/hecke.py
# Reduced words, the Demazure (0-Hecke) product and Hecke words.
#
# The Demazure product folds letters in from the right:
#     w o s_i = w s_i  if w(i) < w(i+1),  otherwise w
# so u o v is u folded with a reduced word of v.

from functools import lru_cache
from typing import FrozenSet, Set, Tuple

from permgroup.bruhat import bruhat_leq
from permgroup.permutation import Permutation

Word = Tuple[int, ...]


def reduced_word(w: Permutation) -> Word:
    """
    A reduced word (a_1, ..., a_k) with w = s_{a_1} ... s_{a_k}, built by
    repeatedly stripping the smallest right descent.
    """
    letters = []
    current = w
    while not current.is_identity():
        i = min(current.des_r())
        letters.append(i)
        current = current.times_simple(i)
    return tuple(reversed(letters))


def demazure_simple(w: Permutation, i: int) -> Permutation:
    """
    w o s_i.
    """
    if w.has_right_descent(i):
        return w
    return w.times_simple(i)


def demazure_word(word: Word, start: Permutation = None) -> Permutation:
    result = start if start is not None else Permutation.identity()
    for a in word:
        result = demazure_simple(result, a)
    return result


def demazure(u: Permutation, v: Permutation) -> Permutation:
    """
    The Demazure product u o v.
    """
    return demazure_word(reduced_word(v), u)


def hecke_words(w: Permutation, max_len: int) -> Set[Word]:
    """
    All words a of length <= max_len with s_{a_1} o ... o s_{a_k} = w and letters
    below the window size of w (letter 1 for the identity).

    Prefix products only grow in Bruhat order, so the search drops any branch
    that leaves the interval below w.
    """
    n = max(w.size, 2)

    @lru_cache(maxsize=None)
    def completions(current: Permutation, budget: int) -> FrozenSet[Word]:
        found = set()
        if current == w:
            found.add(())
        if budget == 0:
            return frozenset(found)
        for a in range(1, n):
            nxt = demazure_simple(current, a)
            if not bruhat_leq(nxt, w):
                continue
            for tail in completions(nxt, budget - 1):
                found.add((a,) + tail)
        return frozenset(found)

    return set(completions(Permutation.identity(), max_len))
