# src/involutions/involution.py
# Involutions of the positive integers with finite support, stored as 2-cycles.
#
# Text forms: cycle notation "(1,4)(2,5)" or any one-line form accepted by
# Permutation.parse ("45312", "4,5,3,1,2"). "1" is the identity.

from typing import Iterable, Iterator, List, Sequence, Tuple

from errors import PreconditionError
from permgroup import Permutation, PermutationError, is_vexillary, is_dominant

Cycle = Tuple[int, int]


class NotInvolutionError(PermutationError):
    pass


class NotVexillaryError(PreconditionError):
    """
    Raised when an operation defined on vexillary involutions gets a 2143-containing one.
    """
    pass


class NotFixedPointFreeError(PreconditionError):
    pass


class Involution:
    """
    Self-inverse permutation. `cycles` lists the 2-cycles (a, b), a < b, sorted by a.
    """

    __slots__ = ("cycles", "perm")

    def __init__(self, cycles: Iterable[Sequence[int]] = ()):
        pairs = []
        seen = set()
        for cycle in cycles:
            if len(cycle) != 2:
                raise NotInvolutionError(f"cycle {tuple(cycle)} is not a 2-cycle")
            a, b = sorted(int(c) for c in cycle)
            if a < 1 or a == b or a in seen or b in seen:
                raise NotInvolutionError(f"invalid or overlapping cycle ({a},{b})")
            seen.update((a, b))
            pairs.append((a, b))
        self.cycles: Tuple[Cycle, ...] = tuple(sorted(pairs))
        self.perm: Permutation = Permutation.from_cycles(self.cycles)

    @classmethod
    def identity(cls) -> "Involution":
        return cls(())

    @classmethod
    def from_permutation(cls, w: Permutation) -> "Involution":
        if w * w != Permutation.identity():
            raise NotInvolutionError(f"{w.render()} is not an involution")
        return cls((i, w(i)) for i in range(1, w.size + 1) if i < w(i))

    @classmethod
    def parse(cls, text: str) -> "Involution":
        return cls.from_permutation(Permutation.parse(text))

    # ---- evaluation ---------------------------------------------------

    def __call__(self, i: int) -> int:
        return self.perm(i)

    @property
    def size(self) -> int:
        """
        q = largest moved point, 0 for the identity.
        """
        return self.perm.size

    def one_line(self, n: int = None) -> Tuple[int, ...]:
        return self.perm.one_line(n)

    def is_identity(self) -> bool:
        return not self.cycles

    def cyc(self) -> int:
        return len(self.cycles)

    def length(self) -> int:
        return self.perm.length()

    def fixed_points(self) -> List[int]:
        """
        Fixed points inside 1..q.
        """
        return [i for i in range(1, self.size + 1) if self(i) == i]

    def left_endpoints(self) -> List[int]:
        return [a for a, _ in self.cycles]

    def is_vexillary(self) -> bool:
        return is_vexillary(self.perm)

    def is_dominant(self) -> bool:
        return is_dominant(self.perm)

    def require_vexillary(self) -> "Involution":
        if not self.is_vexillary():
            raise NotVexillaryError(f"not vexillary: {self.render()}")
        return self

    # ---- transformations ----------------------------------------------

    def conjugate(self, i: int) -> "Involution":
        """
        s_i z s_i.
        """
        return Involution.from_permutation(self.perm.simple_times(i).times_simple(i))

    def conjugate_by(self, sigma: Permutation) -> "Involution":
        """
        sigma^{-1} z sigma.
        """
        return Involution.from_permutation(sigma.inverse() * self.perm * sigma)

    def times_simple(self, i: int) -> "Involution":
        """
        z s_i, an involution only when z(i) = i+1 or i, i+1 are both fixed.
        """
        return Involution.from_permutation(self.perm.times_simple(i))

    def one_times(self, n: int = 1) -> "Involution":
        return Involution((a + n, b + n) for a, b in self.cycles)

    # ---- comparison / rendering ---------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Involution):
            return NotImplemented
        return self.cycles == other.cycles

    def __hash__(self):
        return hash(("inv", self.cycles))

    def __getstate__(self):
        return self.cycles

    def __setstate__(self, state):
        self.cycles = state
        self.perm = Permutation.from_cycles(state)

    def sort_key(self):
        return self.size, self.perm.window

    def render(self) -> str:
        if not self.cycles:
            return "1"
        return "".join(f"({a},{b})" for a, b in self.cycles)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Involution({self.render()})"

    def to_json(self) -> List[List[int]]:
        return [[a, b] for a, b in self.cycles]


class FpfInvolution(Involution):
    """
    Fixed-point-free involution in S_n, n even. Outside 1..n the convention
    (n+1, n+2)(n+3, n+4)... is implicit and never stored.
    """

    __slots__ = ("n",)

    def __init__(self, cycles: Iterable[Sequence[int]], n: int = None):
        super().__init__(cycles)
        covered = {c for pair in self.cycles for c in pair}
        n = max(covered, default=0) if n is None else n
        if n % 2 or covered != set(range(1, n + 1)):
            raise NotFixedPointFreeError(
                f"{self.render()} is not a fixed-point-free involution of 1..{n}"
            )
        self.n = n

    @classmethod
    def parse(cls, text: str) -> "FpfInvolution":
        z = Involution.parse(text)
        return cls(z.cycles)

    def __getstate__(self):
        return self.cycles, self.n

    def __setstate__(self, state):
        cycles, n = state
        Involution.__setstate__(self, cycles)
        self.n = n

    def __repr__(self):
        return f"FpfInvolution({self.render()})"


def enumerate_involutions(n: int) -> Iterator[Involution]:
    """
    All of I_n in lexicographic one-line order.
    """
    def matchings(points: Tuple[int, ...]) -> Iterator[List[Cycle]]:
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for tail in matchings(rest):
            yield tail
        for index, partner in enumerate(rest):
            remaining = rest[:index] + rest[index + 1:]
            for tail in matchings(remaining):
                yield [(first, partner)] + tail

    found = [Involution(m) for m in matchings(tuple(range(1, n + 1)))]
    yield from sorted(found, key=lambda z: z.perm.one_line(n))


def enumerate_fpf(n: int) -> Iterator[FpfInvolution]:
    """
    Fixed-point-free involutions of 1..n (n even), lexicographic one-line order.
    """
    if n % 2:
        raise NotFixedPointFreeError(f"fixed-point-free involutions need even n, got {n}")
    for z in enumerate_involutions(n):
        if len(z.cycles) * 2 == n:
            yield FpfInvolution(z.cycles, n)


def enumerate_vexillary(n: int) -> Iterator[Involution]:
    return (z for z in enumerate_involutions(n) if z.is_vexillary())


def dom_pq(p: int, q: int) -> Involution:
    """
    (1,q)(2,q-1)...(p,q-p+1); dom_00 is the identity.
    """
    if p < 0 or q < 2 * p:
        raise PreconditionError(f"dom_pq needs 0 <= 2p <= q, got p={p}, q={q}")
    return Involution((i, q - i + 1) for i in range(1, p + 1))

