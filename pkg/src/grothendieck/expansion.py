# src/grothendieck/expansion.py
# Expansions sum_w c_w(beta) G_w in the Grothendieck basis.
#
# expand() peels one basis element per step: among the remainder's terms of least
# x-degree it takes the greatest monomial x^c with x_n, x_{n-1}, ... compared first,
# decodes c as the Lehmer code of w and subtracts the matching multiple of G_w. The
# lowest x-degree part of G_w is a Schubert polynomial whose leading monomial in that
# order is x^{c(w)}, so each step clears the chosen term and adds only smaller ones.
# A StepBudget aborts the loop if the remainder never reaches zero.

from types import MappingProxyType
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from errors import InvariantBreach
from logger import get_logger
from metrics import EXPANSION_STEPS_TOTAL
from permgroup import Permutation, from_code
from polyring import MultiPoly
from resilience import StepBudget
from grothendieck.polynomials import groth

logger = get_logger(__name__)

Coefficient = Union[MultiPoly, int]


class NormalizationError(InvariantBreach):
    """
    Raised when a coefficient is not an integer multiple of the expected beta power.
    """
    pass


def _as_coefficient(c: Coefficient) -> MultiPoly:
    poly = c if isinstance(c, MultiPoly) else MultiPoly.constant(c)
    if not poly.is_beta_only():
        raise ValueError(f"expansion coefficients must be polynomials in beta, got {poly.render()}")
    return poly


class GrothExpansion:
    """
    Finite sum of Grothendieck polynomials with coefficients in Z[beta].
    No stored coefficient is zero.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[Permutation, Coefficient]] = None):
        clean: Dict[Permutation, MultiPoly] = {}
        for w, c in (coeffs or {}).items():
            total = clean.get(w, MultiPoly()) + _as_coefficient(c)
            if total:
                clean[w] = total
            else:
                clean.pop(w, None)
        self._coeffs = clean

    @property
    def coeffs(self) -> Mapping[Permutation, MultiPoly]:
        return MappingProxyType(self._coeffs)

    def items(self) -> List[Tuple[Permutation, MultiPoly]]:
        """
        Terms sorted by (length, one-line window).
        """
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[Permutation]:
        return iter(w for w, _ in self.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __contains__(self, w: Permutation) -> bool:
        return w in self._coeffs

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def coefficient(self, w: Permutation) -> MultiPoly:
        return self._coeffs.get(w, MultiPoly())

    # ---- arithmetic ---------------------------------------------------

    def __add__(self, other: "GrothExpansion") -> "GrothExpansion":
        if not isinstance(other, GrothExpansion):
            return NotImplemented
        merged = dict(self._coeffs)
        for w, c in other._coeffs.items():
            merged[w] = merged.get(w, MultiPoly()) + c
        return GrothExpansion(merged)

    def __neg__(self) -> "GrothExpansion":
        return GrothExpansion({w: -c for w, c in self._coeffs.items()})

    def __sub__(self, other: "GrothExpansion") -> "GrothExpansion":
        if not isinstance(other, GrothExpansion):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "GrothExpansion":
        factor = _as_coefficient(c)
        return GrothExpansion({w: coeff * factor for w, coeff in self._coeffs.items()})

    def map_indices(self, fn: Callable[[Permutation], Optional[Permutation]]) -> "GrothExpansion":
        """
        Relabel every basis index by `fn`; None drops the term.
        """
        result: Dict[Permutation, MultiPoly] = {}
        for w, c in self._coeffs.items():
            image = fn(w)
            if image is not None:
                result[image] = result.get(image, MultiPoly()) + c
        return GrothExpansion(result)

    def __eq__(self, other):
        if not isinstance(other, GrothExpansion):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # ---- evaluation ---------------------------------------------------

    def evaluate(self) -> MultiPoly:
        """
        Resum to a polynomial.
        """
        total = MultiPoly()
        for w, c in self._coeffs.items():
            total = total + c * groth(w)
        return total

    def normalized(self, base_length: int) -> Dict[Permutation, int]:
        """
        Integer map w -> g with coeffs[w] = g * beta^{l(w) - base_length}.
        """
        result: Dict[Permutation, int] = {}
        for w, c in self.items():
            expected = w.length() - base_length
            single = c.beta_monomial()
            if expected < 0 or single is None or single[1] != expected:
                raise NormalizationError(
                    f"coefficient {c.render()} of G[{w.render()}] is not an integer "
                    f"multiple of b^{expected}"
                )
            result[w] = single[0]
        return result

    # ---- rendering ----------------------------------------------------

    def render(self) -> str:
        """
        Text form, e.g. "2*G[213] + b^1*G[312]".
        """
        if not self._coeffs:
            return "0"
        parts = []
        for w, c in self.items():
            basis = f"G[{w.render()}]"
            if c == 1:
                parts.append(basis)
            elif c == -1:
                parts.append(f"-{basis}")
            elif len(c) == 1:
                parts.append(f"{c.render()}*{basis}")
            else:
                parts.append(f"({c.render()})*{basis}")
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"GrothExpansion({self.render()!r})"

    def to_json(self) -> dict:
        return {"terms": [{"w": w.to_json(), "coeff": c.to_json()} for w, c in self.items()]}

    @classmethod
    def from_json(cls, payload: Mapping) -> "GrothExpansion":
        return cls({
            Permutation(term["w"]): MultiPoly.from_json(term["coeff"])
            for term in payload["terms"]
        })


def _leading_key(remainder: Mapping) -> Tuple[int, Tuple[int, ...]]:
    # least x-degree, then greatest exponent vector read from the last variable
    # down (x^{c(w)} leads G_w in this order), then least beta power
    width = max(len(exps) for _, exps in remainder)

    def rank(key):
        b, exps = key
        padded = exps + (0,) * (width - len(exps))
        return (-sum(exps), padded[::-1], -b)

    return max(remainder, key=rank)


def expand(p: MultiPoly, budget_override: Optional[int] = None) -> GrothExpansion:
    """
    The unique expansion of p in the Grothendieck basis.

    Raises:
        StepBudgetExceeded: if the remainder is not cleared within the step budget
    """
    budget = StepBudget.for_size("expand", len(p), p.total_degree(), override=budget_override)
    remainder: Dict = dict(p.terms)
    coeffs: Dict[Permutation, MultiPoly] = {}

    while remainder:
        budget.record_step()
        b, exps = _leading_key(remainder)
        gamma = remainder[(b, exps)]
        w = from_code(exps)
        for (gb, gexps), gc in groth(w).items():
            key = (gb + b, gexps)
            value = remainder.get(key, 0) - gamma * gc
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
        if (b, exps) in remainder:
            raise InvariantBreach(
                f"peeling G[{w.render()}] did not clear its leading term x^{list(exps)}"
            )
        coeffs[w] = coeffs.get(w, MultiPoly()) + MultiPoly.beta(b, gamma)

    EXPANSION_STEPS_TOTAL.inc(budget.steps_taken)
    logger.debug(f"expand: {len(p)} terms -> {len(coeffs)} basis elements in {budget.steps_taken} steps")
    return GrothExpansion(coeffs)
