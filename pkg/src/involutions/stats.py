# src/involutions/stats.py
# Involution statistics and the half Rothe diagram.

from dataclasses import dataclass
from typing import FrozenSet, Tuple

from errors import InvariantBreach
from involutions.involution import Involution, NotVexillaryError
from permgroup import rothe_diagram, transpose

Cell = Tuple[int, int]


@dataclass(frozen=True)
class InvStats:
    """
    Statistics of one involution z.

    cyc             number of 2-cycles
    ell_inv         (length + cyc) / 2
    des_v           visible descents {i : z(i) > z(i+1) <= i}
    k               max {i : z(i) > i}, 0 for the identity
    quasi_dominant  vexillary and i-1 < z(i-1) whenever 1 < i < z(i)
    j               number of leading fixed points, at least 1
    """
    cyc: int
    ell_inv: int
    des_v: FrozenSet[int]
    k: int
    quasi_dominant: bool
    j: int


def ell_inv(z: Involution) -> int:
    return (z.length() + z.cyc()) // 2


def visible_descents(z: Involution) -> FrozenSet[int]:
    return frozenset(i for i in range(1, z.size + 1) if z(i) > z(i + 1) <= i)


def k_of(z: Involution) -> int:
    return max((a for a, _ in z.cycles), default=0)


def j_of(z: Involution) -> int:
    if z.is_identity():
        return 1
    j = 0
    while z(j + 1) == j + 1:
        j += 1
    return max(j, 1)


def is_quasi_dominant(z: Involution) -> bool:
    if not z.is_vexillary():
        return False
    return all(i - 1 < z(i - 1) for i in range(2, z.size + 1) if i < z(i))


def hat_diagram(z: Involution) -> FrozenSet[Cell]:
    """
    The cells (i, j) of D(z) with i <= j.
    """
    return frozenset((i, j) for (i, j) in rothe_diagram(z.perm) if i <= j)


def hat_code(z: Involution) -> Tuple[int, ...]:
    """
    Row counts of the half diagram, trimmed of trailing zeros.
    """
    cells = hat_diagram(z)
    rows = max((i for i, _ in cells), default=0)
    return tuple(sum(1 for (i, _) in cells if i == r) for r in range(1, rows + 1))


def inv_stats(z: Involution) -> InvStats:
    stats = InvStats(
        cyc=z.cyc(),
        ell_inv=ell_inv(z),
        des_v=visible_descents(z),
        k=k_of(z),
        quasi_dominant=is_quasi_dominant(z),
        j=j_of(z),
    )
    if (z.length() + z.cyc()) % 2 or stats.ell_inv != len(hat_diagram(z)):
        raise InvariantBreach(f"involution length of {z.render()} disagrees with its half diagram")
    return stats


def hat_column_counts(z: Involution) -> Tuple[int, ...]:
    cells = hat_diagram(z)
    cols = max((j for _, j in cells), default=0)
    return tuple(sum(1 for (_, j) in cells if j == c) for c in range(1, cols + 1))


def shape(z: Involution) -> Tuple[int, ...]:
    """
    Involution shape: transpose of the sorted column counts of the half diagram
    (equivalently the row counts of its mirror image below the diagonal).
    sh(<mu|n>) = mu.
    """
    if not z.is_vexillary():
        raise NotVexillaryError(f"not vexillary: {z.render()}")
    counts = tuple(sorted((c for c in hat_column_counts(z) if c), reverse=True))
    return transpose(counts)
