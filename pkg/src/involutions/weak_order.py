# src/involutions/weak_order.py
# Paths in the vexillary weak order graph.
#
# An edge z -> s_j z s_j exists when both ends are vexillary and the length goes
# up (then by exactly 2). Every vexillary z reaches dom_pq, p = cyc(z) and
# q = max moved point, by repeatedly taking
#   - the distinguished ascent while z is not dominant, and
#   - the dominant ascent once z is dominant but not yet dom_pq.

from dataclasses import dataclass
from typing import List, Optional, Tuple

from errors import InvariantBreach
from involutions.involution import Involution, NotVexillaryError, dom_pq
from logger import get_logger
from permgroup import lehmer_code, rothe_diagram

logger = get_logger(__name__)


class PathStepError(InvariantBreach):
    pass


@dataclass(frozen=True)
class DomPath:
    """
    steps[t] = (i_t, involution reached after conjugating by s_{i_t}).
    """
    start: Involution
    steps: Tuple[Tuple[int, Involution], ...]
    p: int
    q: int

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.steps)

    @property
    def end(self) -> Involution:
        return self.steps[-1][1] if self.steps else self.start


def pq(z: Involution) -> Tuple[int, int]:
    if z.is_identity():
        return 0, 0
    return z.cyc(), z.size


def distinguished_ascent(z: Involution) -> Optional[int]:
    """
    min {i : c_i < c_{i+1} = m}, m the largest c_{i+1} with c_i < c_{i+1};
    None when the code is a partition.
    """
    code = list(lehmer_code(z.perm)) + [0]
    rises = [(i + 1, code[i + 1]) for i in range(len(code) - 1) if code[i] < code[i + 1]]
    if not rises:
        return None
    m = max(c for _, c in rises)
    return min(i for i, c in rises if c == m)


def dominant_ascent(z: Involution) -> Optional[int]:
    """
    z(i) for the least i in [p] whose half-diagram row is shorter than q - 2i + 1;
    None when z = dom_pq.
    """
    p, q = pq(z)
    diagram = rothe_diagram(z.perm)
    for i in range(1, p + 1):
        row = sum(1 for (r, c) in diagram if r == i and c >= i)
        if row < q - 2 * i + 1:
            return z(i)
    return None


def next_step(z: Involution) -> Optional[int]:
    if not z.is_dominant():
        return distinguished_ascent(z)
    return dominant_ascent(z)


def dom_path(z: Involution) -> DomPath:
    """
    A path z -> ... -> dom_pq with every index in [q-1]. Each step is checked to
    raise the length by 2 and to stay vexillary.
    """
    if not z.is_vexillary():
        raise NotVexillaryError(f"not vexillary: {z.render()}")
    p, q = pq(z)
    target = dom_pq(p, q)
    steps: List[Tuple[int, Involution]] = []
    current = z
    while current != target:
        j = next_step(current)
        if j is None or not 1 <= j < q:
            raise PathStepError(f"no admissible ascent from {current.render()} towards {target.render()}")
        nxt = current.conjugate(j)
        if nxt.length() != current.length() + 2 or not nxt.is_vexillary():
            raise PathStepError(
                f"step {j} from {current.render()} to {nxt.render()} is not a vexillary weak order edge"
            )
        steps.append((j, nxt))
        current = nxt
    logger.debug(f"dom_path {z.render()} -> {target.render()} via {[i for i, _ in steps]}")
    return DomPath(start=z, steps=tuple(steps), p=p, q=q)
