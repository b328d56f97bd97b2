# src/involutions/atoms.py
# Atoms of involutions and fixed-point-free involutions.
#
# B_inv(z) is the class of alpha_inv(z) under the relation generated on inverse
# one-line words by rewriting a consecutive triple among {cab, cba, bca} (a<b<c).
# The fixed-point-free class replaces triples by 4-letter windows starting at an
# even offset, rewritten among {adbc, bcad, bdac} (a<b<c<d).

from collections import deque
from typing import Callable, Iterable, List, Set, Tuple

from errors import InvariantBreach
from involutions.involution import FpfInvolution, Involution
from logger import get_logger
from permgroup import Permutation, demazure

logger = get_logger(__name__)

Word = Tuple[int, ...]


def alpha_inv(z: Involution) -> Permutation:
    """
    Inverse of the word b_1 a_1 b_2 a_2 ... with repeated letters removed, where
    a_1 < a_2 < ... run over every a <= q with a <= b = z(a).
    """
    word: List[int] = []
    seen = set()
    for a in range(1, z.size + 1):
        b = z(a)
        if a > b:
            continue
        for letter in (b, a):
            if letter not in seen:
                seen.add(letter)
                word.append(letter)
    return Permutation(word).inverse()


def alpha_fpf(z: FpfInvolution) -> Permutation:
    """
    Inverse of a_1 b_1 a_2 b_2 ... over the cycles (a_i, b_i).
    """
    word = [letter for a, b in z.cycles for letter in (a, b)]
    return Permutation(word).inverse()


def _triple_moves(word: Word) -> Iterable[Word]:
    for i in range(len(word) - 2):
        x, y, t = word[i:i + 3]
        a, b, c = sorted((x, y, t))
        if (x, y, t) not in ((c, a, b), (c, b, a), (b, c, a)):
            continue
        for replacement in ((c, a, b), (c, b, a), (b, c, a)):
            if replacement != (x, y, t):
                yield word[:i] + replacement + word[i + 3:]


def _quad_moves(word: Word) -> Iterable[Word]:
    for i in range(0, len(word) - 3, 2):
        window = word[i:i + 4]
        a, b, c, d = sorted(window)
        patterns = ((a, d, b, c), (b, c, a, d), (b, d, a, c))
        if window not in patterns:
            continue
        for replacement in patterns:
            if replacement != window:
                yield word[:i] + replacement + word[i + 4:]


def _closure(start: Word, moves: Callable[[Word], Iterable[Word]]) -> Set[Word]:
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for nxt in moves(word):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def binv(z: Involution) -> Set[Permutation]:
    """
    B_inv(z) = {w : w^{-1} o w = z}, built as the closure of alpha_inv(z).
    """
    start = alpha_inv(z).inverse().one_line(z.size)
    return {Permutation(word).inverse() for word in _closure(start, _triple_moves)}


def binv_sorted(z: Involution) -> List[Permutation]:
    return sorted(binv(z), key=lambda w: w.sort_key())


def check_binv_fiber(z: Involution, atoms: Iterable[Permutation] = None) -> None:
    """
    Every atom w must satisfy w^{-1} o w = z.
    """
    for w in atoms if atoms is not None else binv(z):
        if demazure(w.inverse(), w) != z.perm:
            raise InvariantBreach(f"{w.render()} is in the class of {z.render()} but is not an atom")


def fpf_class(z: FpfInvolution) -> Set[Permutation]:
    """
    Closure of alpha_fpf(z) under the fixed-point-free relation.
    """
    start = alpha_fpf(z).inverse().one_line(z.n)
    return {Permutation(word).inverse() for word in _closure(start, _quad_moves)}


def fpf(z: FpfInvolution) -> Tuple[Permutation, Set[Permutation]]:
    return alpha_fpf(z), fpf_class(z)
