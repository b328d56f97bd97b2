# src/permgroup/permutation.py
# Finitely supported permutations of the positive integers.
#
# A permutation is stored by its one-line window w(1..n), trimmed so the last
# entry is not a fixed point; the identity has the empty window. Composition is
# (u * v)(i) = u(v(i)), so w * s_i swaps positions i, i+1 and s_i * w swaps values.

import re
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from errors import UsageError


class PermutationError(UsageError):
    """
    Raised when text or a sequence does not describe a permutation.
    """
    pass


def _trim_window(values: Sequence[int]) -> Tuple[int, ...]:
    n = len(values)
    while n > 0 and values[n - 1] == n:
        n -= 1
    return tuple(values[:n])


class Permutation:
    """
    Immutable permutation with a canonical one-line window.
    """

    __slots__ = ("window", "_inverse", "_length", "_hash")

    def __init__(self, one_line: Iterable[int] = ()):
        values = tuple(int(v) for v in one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(f"{list(values)} is not a rearrangement of 1..{len(values)}")
        self.window: Tuple[int, ...] = _trim_window(values)
        self._inverse: Optional["Permutation"] = None
        self._length: Optional[int] = None
        self._hash: Optional[int] = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def simple(cls, i: int) -> "Permutation":
        """
        The simple transposition s_i = (i, i+1).
        """
        return cls.transposition(i, i + 1)

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        if a < 1 or b < 1 or a == b:
            raise PermutationError(f"invalid transposition ({a},{b})")
        n = max(a, b)
        values = list(range(1, n + 1))
        values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
        return cls(values)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        mapping: Dict[int, int] = {}
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            if len(set(cycle)) != len(cycle) or any(c < 1 for c in cycle):
                raise PermutationError(f"invalid cycle {tuple(cycle)}")
            for index, a in enumerate(cycle):
                if a in mapping:
                    raise PermutationError(f"cycles are not disjoint at {a}")
                mapping[a] = cycle[(index + 1) % len(cycle)]
        n = max(mapping, default=0)
        return cls([mapping.get(i, i) for i in range(1, n + 1)])

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Accepts one-line digits ("24513"), comma/space separated values
        ("2,4,5,1,3" or "[10, 1, 2, ...]") and cycle notation ("(1,4)(2,5)").
        """
        text = text.strip()
        if not text:
            raise PermutationError("empty permutation")
        if text.startswith("("):
            cycles = re.findall(r"\(([^()]*)\)", text)
            if "".join(f"({c})" for c in cycles) != re.sub(r"\s+", "", text):
                raise PermutationError(f"malformed cycle notation '{text}'")
            try:
                parsed = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x] for c in cycles]
            except ValueError as e:
                raise PermutationError(f"malformed cycle notation '{text}'") from e
            return cls.from_cycles(parsed)
        body = text.strip("[]")
        try:
            if re.fullmatch(r"\d+", body):
                values = [int(ch) for ch in body]
            else:
                values = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
        except ValueError as e:
            raise PermutationError(f"malformed permutation '{text}'") from e
        return cls(values)

    # ---- evaluation ---------------------------------------------------

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.window):
            return self.window[i - 1]
        return i

    @property
    def size(self) -> int:
        """
        Length of the canonical window (smallest n with w in S_n).
        """
        return len(self.window)

    def one_line(self, n: Optional[int] = None) -> Tuple[int, ...]:
        """
        Values w(1..n); n defaults to the window size.
        """
        n = self.size if n is None else n
        if n < self.size:
            raise PermutationError(f"window of size {self.size} does not fit in {n}")
        return self.window + tuple(range(self.size + 1, n + 1))

    def is_identity(self) -> bool:
        return not self.window

    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, v in enumerate(self.window, start=1) if v != i)

    # ---- group structure ----------------------------------------------

    def inverse(self) -> "Permutation":
        if self._inverse is None:
            values = [0] * self.size
            for i, v in enumerate(self.window, start=1):
                values[v - 1] = i
            inv = Permutation(values)
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(self.size, other.size)
        return Permutation([self(other(i)) for i in range(1, n + 1)])

    def times_simple(self, i: int) -> "Permutation":
        """
        w * s_i: swap the entries in positions i and i+1.
        """
        values = list(self.one_line(max(self.size, i + 1)))
        values[i - 1], values[i] = values[i], values[i - 1]
        return Permutation(values)

    def simple_times(self, i: int) -> "Permutation":
        """
        s_i * w: swap the values i and i+1.
        """
        n = max(self.size, i + 1)
        swap = {i: i + 1, i + 1: i}
        return Permutation([swap.get(v, v) for v in self.one_line(n)])

    def swap_positions(self, a: int, b: int) -> "Permutation":
        """
        w * (a, b).
        """
        values = list(self.one_line(max(self.size, a, b)))
        values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
        return Permutation(values)

    # ---- statistics ---------------------------------------------------

    def length(self) -> int:
        """
        Number of inversions i < j with w(i) > w(j).
        """
        if self._length is None:
            w = self.window
            self._length = sum(
                1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
            )
        return self._length

    def des_r(self) -> FrozenSet[int]:
        w = self.window
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def des_l(self) -> FrozenSet[int]:
        return self.inverse().des_r()

    def has_right_descent(self, i: int) -> bool:
        return self(i) > self(i + 1)

    # ---- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("perm", self.window))
        return self._hash

    def __getstate__(self):
        return self.window

    def __setstate__(self, state):
        self.window = state
        self._inverse = None
        self._length = None
        self._hash = None

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """
        Canonical ordering: by length, then one-line window.
        """
        return self.length(), self.window

    # ---- rendering ----------------------------------------------------

    def render(self) -> str:
        """
        One-line notation; digits are concatenated when every value is below 10.
        """
        if not self.window:
            return "1"
        if self.size <= 9:
            return "".join(str(v) for v in self.window)
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Permutation({self.render()})"

    def to_json(self) -> List[int]:
        return list(self.window)


def lehmer_code(w: Permutation) -> Tuple[int, ...]:
    """
    c_i = #{ j > i : w(j) < w(i) }, trimmed of trailing zeros.
    """
    values = w.window
    code = [sum(1 for j in range(i + 1, len(values)) if values[j] < values[i]) for i in range(len(values))]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def from_code(code: Sequence[int]) -> Permutation:
    """
    Lehmer decode: the unique permutation with the given code.
    """
    code = list(code)
    if any(c < 0 for c in code):
        raise PermutationError(f"code entries must be nonnegative: {code}")
    n = max((i + c for i, c in enumerate(code, start=1)), default=0)
    n = max(n, len(code))
    available = list(range(1, n + 1))
    values = []
    for c in code:
        if c >= len(available):
            raise PermutationError(f"sequence {code} is not a Lehmer code")
        values.append(available.pop(c))
    values.extend(available)
    return Permutation(values)
