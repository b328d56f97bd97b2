# src/involutions/arcs.py
# Arc diagrams and the forbidden-subgraph characterization of vexillary involutions.
#
# The arc diagram of z on vertices 1..n joins i and z(i). z is vexillary exactly when
# no vertex subset closed under z induces (in vertex order) one of the five
# matchings below. Unmatched vertices of a pattern are fixed points of z.

from itertools import combinations
from typing import FrozenSet, Iterator, Tuple

from involutions.involution import Involution

Arc = Tuple[int, int]

FORBIDDEN_ARC_PATTERNS: Tuple[Tuple[int, FrozenSet[Arc]], ...] = (
    (4, frozenset({(1, 2), (3, 4)})),
    (6, frozenset({(1, 4), (3, 6)})),
    (7, frozenset({(1, 5), (3, 7), (4, 6)})),
    (7, frozenset({(1, 5), (2, 4), (3, 7)})),
    (8, frozenset({(1, 6), (2, 5), (3, 8), (4, 7)})),
)


def induced_arcs(z: Involution, vertices: Tuple[int, ...]) -> FrozenSet[Arc]:
    """
    Arcs of z among `vertices`, relabelled 1..len(vertices) in order.
    """
    position = {v: index for index, v in enumerate(vertices, start=1)}
    return frozenset(
        (position[a], position[b])
        for a, b in z.cycles
        if a in position and b in position
    )


def closed_subsets(z: Involution, size: int) -> Iterator[Tuple[int, ...]]:
    """
    Vertex subsets of the given size that contain the partner of every chosen vertex.
    """
    for vertices in combinations(range(1, z.size + 1), size):
        chosen = set(vertices)
        if all(z(v) in chosen for v in vertices):
            yield vertices


def contains_arc_pattern(z: Involution, size: int, arcs: FrozenSet[Arc]) -> bool:
    return any(induced_arcs(z, vertices) == arcs for vertices in closed_subsets(z, size))


def is_vexillary_arc(z: Involution) -> bool:
    return not any(contains_arc_pattern(z, size, arcs) for size, arcs in FORBIDDEN_ARC_PATTERNS)
