# src/ortho/grassmannian.py
# G^O of an I-Grassmannian involution <mu|n> as a finite sum of G^_{<lam|n>}.
#
# lam runs over strict partitions with the same number of parts as mu,
# lam_i - mu_i in {0, 1} and lam_1 <= n. Row i of lam/mu, when present, is the
# single cell in column i + mu_i.

from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

from errors import PreconditionError
from involutions import Involution, igrassmannian
from permgroup import Partition, as_strict_partition
from polyring import BETA, MultiPoly, X
from ortho.polynomials import invgroth


@dataclass(frozen=True)
class IGrassTerm:
    """
    sign * varpi * beta^{beta_pow} * G^_{<lam|n>}, sign = (-1)^{cols + |lam/mu|}.
    """
    mu: Partition
    lam: Partition
    sign: int
    varpi: MultiPoly
    beta_pow: int
    cols: int

    @property
    def almost_weight(self) -> int:
        """
        2^{l(mu) - |lam/mu|}, the value of varpi once every x is set to zero.
        """
        return 2 ** (len(self.mu) - self.beta_pow)

    def involution(self, n: int) -> Involution:
        return igrassmannian(self.lam, n)

    def to_json(self) -> dict:
        return {
            "lam": list(self.lam),
            "sign": self.sign,
            "varpi": self.varpi.render(),
            "beta_pow": self.beta_pow,
            "cols": self.cols,
        }


def _added_columns(mu: Partition, lam: Partition) -> List[int]:
    # column of the added cell in each row, 0 for rows without one
    return [row + mu[row - 1] if lam[row - 1] > mu[row - 1] else 0 for row in range(1, len(mu) + 1)]


def _top_rows(added: List[int]) -> List[int]:
    rows = []
    for row, col in enumerate(added, start=1):
        below = added[row] if row < len(added) else 0
        if col == 0 or below != col:
            rows.append(row)
    return rows


def igrass_expansion(mu, n: int) -> Tuple[IGrassTerm, ...]:
    """
    Terms of G^O_{<mu|n>} = sum_lam (-1)^{cols} varpi (-beta)^{|lam/mu|} G^_{<lam|n>} with
        varpi = prod over top rows i of (2 + mu_i - lam_i + beta x_{n+1-mu_i}).
    """
    mu = as_strict_partition(mu)
    if mu and mu[0] > n:
        raise PreconditionError(f"part too large: {mu[0]} > {n}")
    terms = []
    for steps in product((0, 1), repeat=len(mu)):
        lam = tuple(m + s for m, s in zip(mu, steps))
        if any(lam[i] <= lam[i + 1] for i in range(len(lam) - 1)):
            continue
        if lam and lam[0] > n:
            continue
        added = _added_columns(mu, lam)
        cols = len({c for c in added if c})
        size = sum(steps)
        weight = MultiPoly.constant(1)
        for row in _top_rows(added):
            weight = weight * (2 + mu[row - 1] - lam[row - 1] + BETA * X(n + 1 - mu[row - 1]))
        terms.append(IGrassTerm(
            mu=mu,
            lam=lam,
            sign=(-1) ** (cols + size),
            varpi=weight,
            beta_pow=size,
            cols=cols,
        ))
    terms.sort(key=lambda t: (t.beta_pow, t.lam))
    return tuple(terms)


def igrass_formula(mu, n: int) -> MultiPoly:
    total = MultiPoly()
    for term in igrass_expansion(mu, n):
        coeff = MultiPoly.beta(term.beta_pow, term.sign)
        total = total + coeff * term.varpi * invgroth(term.involution(n))
    return total
