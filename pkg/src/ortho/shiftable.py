# src/ortho/shiftable.py
# Shiftable sets of a vexillary involution and the expansion of G^O_z into
# involution Grothendieck polynomials they index.
#
# Left endpoints a_1 < a_2 < ... of the 2-cycles split into left segments, the
# maximal runs of consecutive integers. The segment containing 1 is immobile.
# Inside a segment, a_j is a crossing bound of a_i (i < j) when the only t in
# [i, j) with z(a_t) < z(a_j) is t = i.

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Tuple

from involutions import Involution
from logger import get_logger
from permgroup import Permutation
from polyring import BETA, MultiPoly, X
from ortho.polynomials import invgroth

logger = get_logger(__name__)


@dataclass(frozen=True)
class LeftSegment:
    members: Tuple[int, ...]
    mobile: bool

    def to_json(self) -> dict:
        return {"members": list(self.members), "mobile": self.mobile}


@dataclass(frozen=True)
class ShiftableSet:
    """
    One shiftable set S with sigma_S, the conjugated involution sigma_S^{-1} z sigma_S,
    its weight varpi_S and theta_S = varpi_S at x = 0.
    """
    members: Tuple[int, ...]
    sigma: Permutation
    conjugate: Involution
    varpi: MultiPoly
    theta: int

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "set": list(self.members),
            "sigma": self.sigma.to_json(),
            "conjugate": self.conjugate.to_json(),
            "varpi": self.varpi.render(),
            "theta": self.theta,
        }


@dataclass(frozen=True)
class ShiftableData:
    z: Involution
    left_endpoints: Tuple[int, ...]
    segments: Tuple[LeftSegment, ...]
    crossing_bounds: Mapping[int, FrozenSet[int]]
    sets: Tuple[ShiftableSet, ...]

    def to_json(self) -> dict:
        return {
            "z": self.z.to_json(),
            "left_endpoints": list(self.left_endpoints),
            "segments": [s.to_json() for s in self.segments],
            "crossing_bounds": {str(a): sorted(c) for a, c in sorted(self.crossing_bounds.items())},
            "sets": [s.to_json() for s in self.sets],
        }


def left_segments(z: Involution) -> Tuple[LeftSegment, ...]:
    runs: List[List[int]] = []
    for a in z.left_endpoints():
        if runs and runs[-1][-1] == a - 1:
            runs[-1].append(a)
        else:
            runs.append([a])
    return tuple(LeftSegment(tuple(run), mobile=run[0] != 1) for run in runs)


def crossing_bounds(z: Involution) -> Dict[int, FrozenSet[int]]:
    result: Dict[int, FrozenSet[int]] = {}
    for segment in left_segments(z):
        members = segment.members
        for i, a in enumerate(members):
            bounds = set()
            for j in range(i + 1, len(members)):
                target = z(members[j])
                below = [t for t in range(i, j) if z(members[t]) < target]
                if below == [i]:
                    bounds.add(members[j])
            result[a] = frozenset(bounds)
    return result


def is_locally_noncrossing(z: Involution) -> bool:
    """
    Any a < b in the same mobile left segment have z(a) > z(b).
    """
    for segment in left_segments(z):
        if not segment.mobile:
            continue
        images = [z(a) for a in segment.members]
        if any(images[t] < images[t + 1] for t in range(len(images) - 1)):
            return False
    return True


def _is_shiftable(subset: FrozenSet[int], crb: Mapping[int, FrozenSet[int]], mobile: FrozenSet[int]) -> bool:
    if not subset <= mobile:
        return False
    return all(a in subset or not (crb[a] & subset) for a in crb)


def _sigma(subset: FrozenSet[int], segments: Tuple[LeftSegment, ...]) -> Permutation:
    # product over mobile segments, in increasing order, of the cycle
    # (min L - 1, c_1, ..., c_k) with c_1 < ... < c_k the elements of S in L
    sigma = Permutation.identity()
    for segment in segments:
        chosen = sorted(a for a in segment.members if a in subset)
        if not segment.mobile or not chosen:
            continue
        cycle = [segment.members[0] - 1] + chosen
        sigma = sigma * Permutation.from_cycles([cycle])
    return sigma


def varpi(z: Involution, subset: FrozenSet[int], crb: Mapping[int, FrozenSet[int]] = None) -> MultiPoly:
    """
    prod over left endpoints a of
        -1              if a in S and S meets crb(a)
        2 + beta x_a    if a not in S
        1 + beta x_a    otherwise
    """
    if crb is None:
        crb = crossing_bounds(z)
    weight = MultiPoly.constant(1)
    for a in z.left_endpoints():
        if a not in subset:
            weight = weight * (2 + BETA * X(a))
        elif crb[a] & subset:
            weight = -weight
        else:
            weight = weight * (1 + BETA * X(a))
    return weight


def theta(z: Involution, subset: FrozenSet[int], crb: Mapping[int, FrozenSet[int]] = None) -> int:
    """
    (-1)^{#{a in S : crb(a) meets S}} 2^{cyc(z) - |S|}.
    """
    if crb is None:
        crb = crossing_bounds(z)
    flips = sum(1 for a in subset if crb[a] & subset)
    return (-1) ** flips * 2 ** (z.cyc() - len(subset))


def shiftable_data(z: Involution) -> ShiftableData:
    """
    Raises:
        NotVexillaryError: if z is not vexillary
    """
    z.require_vexillary()
    segments = left_segments(z)
    crb = crossing_bounds(z)
    mobile = frozenset(a for s in segments if s.mobile for a in s.members)

    sets: List[ShiftableSet] = []
    for size in range(len(mobile) + 1):
        for members in combinations(sorted(mobile), size):
            subset = frozenset(members)
            if not _is_shiftable(subset, crb, mobile):
                continue
            sigma = _sigma(subset, segments)
            sets.append(ShiftableSet(
                members=members,
                sigma=sigma,
                conjugate=z.conjugate_by(sigma),
                varpi=varpi(z, subset, crb),
                theta=theta(z, subset, crb),
            ))
    logger.debug(f"shiftable_data {z.render()}: {len(segments)} segments, {len(sets)} shiftable sets")
    return ShiftableData(
        z=z,
        left_endpoints=tuple(z.left_endpoints()),
        segments=segments,
        crossing_bounds=crb,
        sets=tuple(sets),
    )


def ivex_formula(z: Involution) -> MultiPoly:
    """
    sum over shiftable S of varpi_S beta^{|S|} G^_{sigma_S^{-1} z sigma_S}.
    """
    total = MultiPoly()
    for entry in shiftable_data(z).sets:
        total = total + entry.varpi * MultiPoly.beta(len(entry)) * invgroth(entry.conjugate)
    return total
