# src/polyring/multipoly.py
# Sparse polynomials in Z[beta][x_1, x_2, ...] with exact integer coefficients.
#
# A term is keyed by (beta_exp, x_exps) where x_exps is a tuple of exponents of
# x_1, x_2, ... with trailing zeros removed. beta lives in its own slot rather than
# posing as x_0 so that graded degree and beta-coefficient extraction stay cheap.
#
# MultiPoly values are immutable: every operation returns a new polynomial, so
# they can be cached, hashed and shipped to worker processes freely.

from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

Exps = Tuple[int, ...]
Key = Tuple[int, Exps]


def trim_exps(exps: Iterable[int]) -> Exps:
    """
    Drop trailing zero exponents so equal monomials get equal keys.
    """
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def add_exps(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    # both inputs are trimmed and the longer one dominates the tail
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


class MultiPoly:
    """
    Immutable sparse polynomial over Z in beta and x_1, x_2, ...

    Invariants:
        - no stored coefficient is zero
        - every x_exps key is trimmed of trailing zeros
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Key, int]] = None):
        clean: Dict[Key, int] = {}
        if terms:
            for (b, exps), c in terms.items():
                if b < 0 or any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in term {(b, exps)}")
                key = (b, trim_exps(exps))
                clean[key] = clean.get(key, 0) + int(c)
            clean = {k: c for k, c in clean.items() if c != 0}
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Dict[Key, int]) -> "MultiPoly":
        # Trusted constructor: keys already canonical, zeros already dropped
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # ---- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls._wrap({(0, ()): int(c)} if c else {})

    @classmethod
    def var(cls, i: int) -> "MultiPoly":
        """
        The variable x_i (i >= 1).
        """
        if i < 1:
            raise ValueError(f"variable index must be positive, got {i}")
        return cls._wrap({(0, (0,) * (i - 1) + (1,)): 1})

    @classmethod
    def beta(cls, power: int = 1, coeff: int = 1) -> "MultiPoly":
        """
        coeff * beta^power.
        """
        if power < 0:
            raise ValueError(f"beta power must be nonnegative, got {power}")
        return cls._wrap({(power, ()): int(coeff)} if coeff else {})

    @classmethod
    def monomial(cls, exps: Iterable[int], beta_exp: int = 0, coeff: int = 1) -> "MultiPoly":
        return cls({(beta_exp, tuple(exps)): coeff})

    # ---- access -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Key, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Key, int]]:
        return iter(self._terms.items())

    def sorted_items(self) -> List[Tuple[Key, int]]:
        """
        Terms in canonical order: ascending beta exponent, then lexicographic x exponents.
        """
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Iterable[int], beta_exp: int = 0) -> int:
        return self._terms.get((beta_exp, trim_exps(exps)), 0)

    def num_vars(self) -> int:
        """
        Largest i such that x_i occurs, 0 for polynomials in beta only.
        """
        return max((len(exps) for _, exps in self._terms), default=0)

    def max_beta(self) -> int:
        return max((b for b, _ in self._terms), default=0)

    def total_degree(self) -> int:
        """
        Largest sum of x and beta exponents over all terms.
        """
        return max((b + sum(exps) for b, exps in self._terms), default=0)

    def is_beta_only(self) -> bool:
        return all(not exps for _, exps in self._terms)

    def beta_monomial(self) -> Optional[Tuple[int, int]]:
        """
        If this polynomial is c * beta^k with c != 0, return (c, k).
        """
        if len(self._terms) != 1:
            return None
        (b, exps), c = next(iter(self._terms.items()))
        if exps:
            return None
        return c, b

    # ---- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for key, c in other._terms.items():
            value = result.get(key, 0) + c
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return MultiPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c: int) -> "MultiPoly":
        if c == 0:
            return MultiPoly()
        return MultiPoly._wrap({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: Dict[Key, int] = {}
        for (b1, e1), c1 in self._terms.items():
            for (b2, e2), c2 in other._terms.items():
                key = (b1 + b2, add_exps(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
        return MultiPoly._wrap({k: c for k, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_keys(self, fn) -> "MultiPoly":
        """
        Apply `fn(beta_exp, x_exps) -> key or None` to every term; None drops the term.
        Coefficients of colliding keys are summed.
        """
        result: Dict[Key, int] = {}
        for (b, exps), c in self._terms.items():
            key = fn(b, exps)
            if key is None:
                continue
            key = (key[0], trim_exps(key[1]))
            result[key] = result.get(key, 0) + c
        return MultiPoly._wrap({k: c for k, c in result.items() if c})

    # ---- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- rendering ----------------------------------------------------

    def render(self) -> str:
        """
        Text form in canonical order, e.g. "2*x1 + b^1*x1^2". Unit coefficients are omitted.
        """
        if not self._terms:
            return "0"
        parts = []
        for (b, exps), c in self.sorted_items():
            factors = []
            if b:
                factors.append(f"b^{b}")
            for index, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"x{index}")
                elif e > 1:
                    factors.append(f"x{index}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiPoly({self.render()!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"b": b, "x": list(exps), "c": str(c)}
                for (b, exps), c in self.sorted_items()
            ]
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> "MultiPoly":
        return cls({(int(t["b"]), tuple(int(e) for e in t["x"])): int(t["c"]) for t in payload["terms"]})


# Frequently used constants
ZERO = MultiPoly()
ONE = MultiPoly.constant(1)
BETA = MultiPoly.beta(1)


def X(i: int) -> MultiPoly:
    """
    Shorthand for the variable x_i.
    """
    return MultiPoly.var(i)
