# src/permgroup/bruhat.py
# Bruhat order, covers by transpositions, shift embeddings and Grassmannian permutations

from typing import Iterable, Optional

from errors import PreconditionError, UsageError
from permgroup.partitions import as_partition
from permgroup.permutation import Permutation


class NotShiftableError(PreconditionError):
    """
    Raised when w cannot be shifted down because it moves some i <= n.
    """
    pass


class TooManyPartsError(PreconditionError):
    pass


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Tableau criterion: u <= v iff for every i the sorted prefix u(1..i) is
    entrywise <= the sorted prefix v(1..i).
    """
    n = max(u.size, v.size)
    a, b = u.one_line(n), v.one_line(n)
    for i in range(1, n):
        if any(x > y for x, y in zip(sorted(a[:i]), sorted(b[:i]))):
            return False
    return True


def bruhat_cover(v: Permutation, a: int, b: int) -> Optional[Permutation]:
    """
    w = v (a, b) when it covers v: v(a) < v(b) and no a < i < b has v(a) < v(i) < v(b).
    """
    if not (1 <= a < b):
        raise UsageError(f"bruhat_cover needs 1 <= a < b, got ({a},{b})")
    low, high = v(a), v(b)
    if low > high:
        return None
    if any(low < v(i) < high for i in range(a + 1, b)):
        return None
    return v.swap_positions(a, b)


def one_times(w: Permutation, n: int = 1) -> Permutation:
    """
    1^n x w: fixes 1..n and sends i+n to w(i)+n.
    """
    if n < 0:
        raise UsageError(f"shift amount must be nonnegative, got {n}")
    if w.is_identity():
        return w
    return Permutation(list(range(1, n + 1)) + [v + n for v in w.window])


def shift_down(w: Permutation, n: int = 1) -> Permutation:
    """
    w down n: i -> w(i+n) - n, defined when w fixes 1..n.
    """
    if n < 0:
        raise UsageError(f"shift amount must be nonnegative, got {n}")
    if any(w(i) != i for i in range(1, n + 1)):
        raise NotShiftableError(f"not shiftable: {w.render()} moves some i <= {n}")
    return Permutation([v - n for v in w.window[n:]])


def embed(w: Permutation, mode: str, n: int) -> Permutation:
    if mode == "one_times":
        return one_times(w, n)
    if mode == "down":
        return shift_down(w, n)
    raise UsageError(f"unknown embedding mode '{mode}'")


def grassmannian(lam: Iterable[int], n: int) -> Permutation:
    """
    [lam|n]: the permutation with descents only at n and
    (w(1)-1, ..., w(n)-n) = (lam_n, ..., lam_1).
    """
    lam = as_partition(lam)
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if len(lam) > n:
        raise TooManyPartsError(f"too many parts: {lam} has more than {n} parts")
    padded = list(lam) + [0] * (n - len(lam))
    head = [i + padded[n - i] for i in range(1, n + 1)]
    total = n + (lam[0] if lam else 0)
    tail = [v for v in range(1, total + 1) if v not in set(head)]
    return Permutation(head + tail)


def is_grassmannian(w: Permutation, n: int) -> bool:
    return w.des_r() <= {n}
