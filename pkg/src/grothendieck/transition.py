# src/grothendieck/transition.py
# Transition and Pieri formulas for Grothendieck polynomials, computed from chains
# in Bruhat order instead of by multiplying and expanding.
#
# Every chain step is a Bruhat cover v -> v (a, b) (positions a < b swapped).
# Transpositions never need b beyond max(window of v, k) + 1: past that point the
# value b itself sits between v(a) and v(b) and blocks the cover.

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from errors import InvariantBreach, PreconditionError, UsageError
from logger import get_logger
from permgroup import Partition, Permutation, as_partition, bruhat_cover, grassmannian
from polyring import MultiPoly
from grothendieck.expansion import GrothExpansion

logger = get_logger(__name__)

Step = Tuple[int, int]


def _chain_bound(v: Permutation, k: int) -> int:
    return max(v.size, k) + 1


def _signed_beta(sign: int, power: int) -> MultiPoly:
    return MultiPoly.beta(power, sign)


def _binomial(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


# ---- Lenart transition ------------------------------------------------


def lenart_transition(k: int, v: Permutation) -> GrothExpansion:
    """
    (1 + beta x_k) G_v as sum over chains
        v -(a_1,k)-> ... -(a_p,k)-> -(k,b_1)-> ... -(k,b_q)-> w
    with a_p < ... < a_1 < k < b_q < ... < b_1, each weighted (-1)^p beta^{p+q}.
    """
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    bound = _chain_bound(v, k)
    terms: Dict[Permutation, MultiPoly] = {}

    def record(w: Permutation, p: int, q: int) -> None:
        terms[w] = terms.get(w, MultiPoly()) + _signed_beta((-1) ** p, p + q)

    def right_phase(current: Permutation, p: int, q: int, last_b: int) -> None:
        record(current, p, q)
        for b in range(last_b - 1, k, -1):
            nxt = bruhat_cover(current, k, b)
            if nxt is not None:
                right_phase(nxt, p, q + 1, b)

    def left_phase(current: Permutation, p: int, last_a: int) -> None:
        right_phase(current, p, 0, bound + 1)
        for a in range(last_a - 1, 0, -1):
            nxt = bruhat_cover(current, a, k)
            if nxt is not None:
                left_phase(nxt, p + 1, a)

    left_phase(v, 0, k)
    return GrothExpansion(terms)


def one_row_transition(j: int, n: int) -> GrothExpansion:
    """
    (1 + beta x_{n+1}) G_{[1^j|n]}
        = sum_{i=j}^{n} (-beta)^{i-j} G_{[1^i|n]} - sum_{i=j+1}^{n+1} (-beta)^{i-j} G_{[1^i|n+1]}.
    """
    if n < 1 or not 0 <= j <= n:
        raise UsageError(f"one_row_transition needs 0 <= j <= n and n >= 1, got j={j}, n={n}")
    terms: Dict[Permutation, MultiPoly] = {}
    for i in range(j, n + 1):
        w = grassmannian((1,) * i, n)
        terms[w] = terms.get(w, MultiPoly()) + _signed_beta((-1) ** (i - j), i - j)
    for i in range(j + 1, n + 2):
        w = grassmannian((1,) * i, n + 1)
        terms[w] = terms.get(w, MultiPoly()) - _signed_beta((-1) ** (i - j), i - j)
    return GrothExpansion(terms)


# ---- k-Pieri chains ---------------------------------------------------


@dataclass(frozen=True)
class PieriChain:
    """
    An unmarked k-Pieri chain start -(a_1,b_1)-> ... -(a_q,b_q)-> end.
    """
    start: Permutation
    end: Permutation
    k: int
    steps: Tuple[Step, ...]

    @property
    def f_stat(self) -> int:
        steps = self.steps
        count = 0
        for i in range(len(steps)):
            head = steps[: i + 1]
            leading_run = (
                all(b == head[0][1] for _, b in head)
                and all(head[t][0] > head[t + 1][0] for t in range(i))
            )
            joined = (
                i + 1 < len(steps)
                and steps[i][1] == steps[i + 1][1]
                and steps[i][0] > steps[i + 1][0]
            )
            if leading_run or joined:
                count += 1
        return count

    @property
    def p_stat(self) -> int:
        seen = set()
        count = 0
        for a, _ in self.steps:
            if a in seen:
                count += 1
            seen.add(a)
        return count


StepFilter = Optional[Callable[[int, int], bool]]


def _extends(steps: Tuple[Step, ...], a: int, b: int) -> bool:
    # b weakly decreasing; a repeated a_i followed by a drop in a forces a strict drop in b
    if not steps:
        return True
    last_a, last_b = steps[-1]
    if b > last_b:
        return False
    if last_a > a and b == last_b and any(prev_a == last_a for prev_a, _ in steps[:-1]):
        return False
    return True


def pieri_chains(v: Permutation, k: int, step_filter: StepFilter = None) -> Iterator[PieriChain]:
    """
    Every unmarked k-Pieri chain starting at v, the trivial chain included.
    `step_filter(a, b)` can veto individual transpositions.
    """
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    bound = _chain_bound(v, k)

    def walk(current: Permutation, steps: Tuple[Step, ...]) -> Iterator[PieriChain]:
        yield PieriChain(start=v, end=current, k=k, steps=steps)
        top = steps[-1][1] if steps else bound
        for b in range(top, k, -1):
            for a in range(1, k + 1):
                if step_filter is not None and not step_filter(a, b):
                    continue
                if not _extends(steps, a, b):
                    continue
                nxt = bruhat_cover(current, a, b)
                if nxt is not None:
                    yield from walk(nxt, steps + ((a, b),))

    yield from walk(v, ())


def pieri_targets(v: Permutation, k: int, step_filter: StepFilter = None) -> Dict[Permutation, PieriChain]:
    """
    End point -> chain, over all unmarked k-Pieri chains from v.

    Raises:
        InvariantBreach: if two distinct chains reach the same end point
    """
    targets: Dict[Permutation, PieriChain] = {}
    for chain in pieri_chains(v, k, step_filter):
        seen = targets.get(chain.end)
        if seen is not None:
            raise InvariantBreach(
                f"two {k}-Pieri chains from {v.render()} to {chain.end.render()}: "
                f"{list(seen.steps)} and {list(chain.steps)}"
            )
        targets[chain.end] = chain
    return targets


def pieri_chain(v: Permutation, w: Permutation, k: int) -> Optional[Tuple[PieriChain, int, int]]:
    """
    The unmarked k-Pieri chain from v to w with its F_k and P_k statistics,
    or None when there is none.
    """
    if w.length() < v.length():
        return None
    chain = pieri_targets(v, k).get(w)
    if chain is None:
        return None
    return chain, chain.f_stat, chain.p_stat


def lensot_product(p: int, k: int, v: Permutation) -> GrothExpansion:
    """
    G_{[1^p|k]} G_v = sum_w binom(l(w)-l(v)-F-P, p-F) beta^{l(w)-l(v)-p} G_w
    over the targets w of unmarked k-Pieri chains from v.
    """
    if not 0 < p <= k:
        raise PreconditionError(f"p out of range: need 0 < p <= k, got p={p}, k={k}")
    base = v.length()
    terms: Dict[Permutation, MultiPoly] = {}
    for w, chain in pieri_targets(v, k).items():
        f, pp = chain.f_stat, chain.p_stat
        gap = w.length() - base
        coeff = _binomial(gap - f - pp, p - f)
        if coeff:
            terms[w] = MultiPoly.beta(gap - p, coeff)
    return GrothExpansion(terms)


# ---- Grassmannian Pieri -----------------------------------------------


def vertical_strips(lam: Partition, k: int, min_size: int) -> Iterator[Partition]:
    """
    Partitions mu with at most k rows such that mu/lam is a vertical strip of at least min_size cells.
    """
    padded = list(lam) + [0] * (k - len(lam))

    def grow(row: int, acc: List[int]) -> Iterator[List[int]]:
        if row == k:
            yield acc
            return
        for add in (0, 1):
            part = padded[row] + add
            if row > 0 and part > acc[row - 1]:
                continue
            yield from grow(row + 1, acc + [part])

    for mu in grow(0, []):
        if sum(mu) - sum(padded) >= min_size:
            yield as_partition(mu)


def _strip_columns(lam: Partition, mu: Partition) -> int:
    return len({mu[i] for i in range(len(mu)) if mu[i] > (lam[i] if i < len(lam) else 0)})


def grassmannian_pieri(p: int, k: int, lam) -> GrothExpansion:
    """
    G_{[1^p|k]} G_{[lam|k]} = sum_mu binom(cols(mu/lam)-1, |mu/lam|-p) beta^{|mu/lam|-p} G_{[mu|k]}.
    """
    if not 0 < p <= k:
        raise PreconditionError(f"p out of range: need 0 < p <= k, got p={p}, k={k}")
    lam = as_partition(lam)
    if len(lam) > k:
        raise PreconditionError(f"too many parts: {lam} has more than {k} parts")
    terms: Dict[Permutation, MultiPoly] = {}
    for mu in vertical_strips(lam, k, p):
        added = sum(mu) - sum(lam)
        coeff = _binomial(_strip_columns(lam, mu) - 1, added - p)
        if coeff:
            terms[grassmannian(mu, k)] = MultiPoly.beta(added - p, coeff)
    return GrothExpansion(terms)


def two_power_product(k: int) -> GrothExpansion:
    """
    prod_{i=1}^{k} (2 + beta x_i) = 2^k - sum_{j=1}^{k} 2^{k-j} (-beta)^j G_{[1^j|k]}.
    """
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    terms: Dict[Permutation, MultiPoly] = {Permutation.identity(): MultiPoly.constant(2 ** k)}
    for j in range(1, k + 1):
        terms[grassmannian((1,) * j, k)] = MultiPoly.beta(j, -(2 ** (k - j)) * (-1) ** j)
    return GrothExpansion(terms)
