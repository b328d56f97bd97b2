# src/permgroup/diagrams.py
# Rothe diagrams, Lehmer codes and the vexillary / dominant pattern tests

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Tuple

from permgroup.permutation import Permutation, lehmer_code

Cell = Tuple[int, int]


@dataclass(frozen=True)
class RotheData:
    """
    D(w), its row counts c(w) and the essential set Ess(D(w)).
    """
    diagram: FrozenSet[Cell]
    code: Tuple[int, ...]
    essential: FrozenSet[Cell]


def rothe_diagram(w: Permutation) -> FrozenSet[Cell]:
    """
    {(i, j) : j < w(i) and i < w^{-1}(j)}.
    """
    inv = w.inverse()
    return frozenset(
        (i, j)
        for i in range(1, w.size + 1)
        for j in range(1, w(i))
        if i < inv(j)
    )


def essential_set(diagram: FrozenSet[Cell]) -> FrozenSet[Cell]:
    return frozenset(
        (i, j) for (i, j) in diagram
        if (i + 1, j) not in diagram and (i, j + 1) not in diagram
    )


def rothe(w: Permutation) -> RotheData:
    diagram = rothe_diagram(w)
    return RotheData(diagram=diagram, code=lehmer_code(w), essential=essential_set(diagram))


def diagram_rows(diagram: FrozenSet[Cell]) -> List[FrozenSet[int]]:
    """
    Column sets D_1, D_2, ... up to the last nonempty row.
    """
    n = max((i for i, _ in diagram), default=0)
    return [frozenset(j for (i, j) in diagram if i == r) for r in range(1, n + 1)]


def is_vexillary(w: Permutation) -> bool:
    """
    True if w avoids 2143: no positions a<b<c<d with w(b) < w(a) < w(d) < w(c).
    """
    values = w.window
    for a, b, c, d in combinations(range(len(values)), 4):
        if values[b] < values[a] < values[d] < values[c]:
            return False
    return True


def is_vexillary_by_rows(w: Permutation) -> bool:
    """
    Diagram form of the vexillary test: the row sets D_i(w) are totally ordered by inclusion.
    """
    rows = [r for r in diagram_rows(rothe_diagram(w)) if r]
    return all(r <= s or s <= r for r, s in combinations(rows, 2))


def is_dominant(w: Permutation) -> bool:
    """
    Dominant permutations have a weakly decreasing code (D(w) is a Young diagram).
    """
    code = lehmer_code(w)
    return all(code[i] >= code[i + 1] for i in range(len(code) - 1))


def diagram_shape(w: Permutation) -> Tuple[int, ...]:
    """
    The partition obtained by sorting the code of w.
    """
    return tuple(sorted((c for c in lehmer_code(w) if c), reverse=True))
