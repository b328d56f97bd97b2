# src/ortho/binv_plus.py
# B_inv^+(z): end points of restricted k(z)-Pieri chains out of B_inv(z), and the
# digraph on them with an edge v -> s_i v whenever the length goes up by one.

from dataclasses import dataclass
from typing import Callable, FrozenSet, Optional, Tuple

import networkx as nx

from grothendieck import pieri_targets
from involutions import Involution, binv, j_of, k_of
from logger import get_logger
from permgroup import Permutation

logger = get_logger(__name__)


@dataclass(frozen=True)
class BinvPlus:
    z: Involution
    atoms: FrozenSet[Permutation]
    members: FrozenSet[Permutation]
    graph: nx.DiGraph

    def is_connected(self) -> bool:
        return nx.is_weakly_connected(self.graph)

    def minimal(self) -> FrozenSet[Permutation]:
        return frozenset(w for w in self.graph if self.graph.in_degree(w) == 0)


def chain_step_filter(z: Involution) -> Callable[[int, int], bool]:
    """
    Transpositions (a, b) allowed in B_inv^+ chains: j(z) <= a and
    either a < z(a) or z(b) < b.
    """
    j = j_of(z)
    return lambda a, b: j <= a and (a < z(a) or z(b) < b)


def left_weak_graph(members, atoms=frozenset()) -> nx.DiGraph:
    """
    Edges v -> s_i v inside `members` with l(s_i v) = l(v) + 1. Nodes carry
    `label` (inverse one-line word), `length` and `atom`.
    """
    graph = nx.DiGraph()
    for w in members:
        graph.add_node(w, label=w.inverse().render(), length=w.length(), atom=w in atoms)
    for v in members:
        top = v.size + 1
        for i in range(1, top):
            w = v.simple_times(i)
            if w in graph and w.length() == v.length() + 1:
                graph.add_edge(v, w, i=i)
    return graph


def binv_plus_data(z: Involution) -> BinvPlus:
    atoms = frozenset(binv(z))
    k = k_of(z)
    members = set(atoms)
    if k > 0:
        allowed = chain_step_filter(z)
        for v in atoms:
            members.update(pieri_targets(v, k, allowed))
    members = frozenset(members)
    graph = left_weak_graph(members, atoms)
    logger.debug(
        f"binv_plus {z.render()}: {len(atoms)} atoms, {len(members)} members, "
        f"{graph.number_of_edges()} edges"
    )
    return BinvPlus(z=z, atoms=atoms, members=members, graph=graph)


def binv_plus(z: Involution) -> Tuple[FrozenSet[Permutation], nx.DiGraph]:
    data = binv_plus_data(z)
    return data.members, data.graph


def support_matches(z: Involution, support, members: Optional[FrozenSet[Permutation]] = None) -> bool:
    """
    Whether a GC^O support equals B_inv^+(z).
    """
    if members is None:
        members = binv_plus_data(z).members
    return frozenset(support) == members
