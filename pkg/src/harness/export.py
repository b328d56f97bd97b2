# src/harness/export.py
# Deterministic exports: the B_inv^+ digraph as DOT or JSON, polynomials and
# shiftable-set data as JSON.

import json
from typing import Dict, List

from errors import UsageError
from involutions import Involution
from logger import get_logger
from permgroup import Permutation
from polyring import MultiPoly
from ortho import BinvPlus, binv_plus_data, gc_values, shiftable_data

logger = get_logger(__name__)

KINDS = ("binv_plus_dot", "binv_plus_json", "poly_json", "shiftable_json")

ATOM_COLOR = "blue"


def _ordered(data: BinvPlus) -> List[Permutation]:
    return sorted(data.members, key=lambda w: (w.length(), w.inverse().one_line(w.size)))


def _node_values(z: Involution, members) -> Dict[Permutation, int]:
    values = gc_values(z)
    return {w: values.get(w, 0) for w in members}


def binv_plus_dot(z: Involution) -> str:
    """
    DOT text for the B_inv^+ digraph. Each box reads "w^{-1}:GC^O_z(w)", one rank
    per length, atoms in blue.
    """
    data = binv_plus_data(z)
    nodes = _ordered(data)
    index = {w: i for i, w in enumerate(nodes)}
    values = _node_values(z, nodes)

    lines = ["digraph binv_plus {", f'\tlabel="{z.render()}";', "\tnode [shape = box];"]
    for length in sorted({w.length() for w in nodes}):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for w in nodes:
            if w.length() != length:
                continue
            style = f", color = {ATOM_COLOR}, fontcolor = {ATOM_COLOR}" if w in data.atoms else ""
            lines.append(f'\t\t"{index[w]}" [label="{w.inverse().render()}:{values[w]}"{style}];')
        lines.append("\t}")
    edges = sorted((index[v], index[w]) for v, w in data.graph.edges)
    for a, b in edges:
        lines.append(f'\t"{a}" -> "{b}";')
    lines.append("}")
    logger.debug(f"binv_plus_dot {z.render()}: {len(nodes)} nodes, {len(edges)} edges")
    return "\n".join(lines) + "\n"


def binv_plus_json(z: Involution) -> dict:
    data = binv_plus_data(z)
    nodes = _ordered(data)
    values = _node_values(z, nodes)
    index = {w: i for i, w in enumerate(nodes)}
    return {
        "z": z.to_json(),
        "nodes": [
            {
                "w": w.to_json(),
                "inverse": w.inverse().to_json(),
                "length": w.length(),
                "atom": w in data.atoms,
                "gc": values[w],
            }
            for w in nodes
        ],
        "edges": sorted([index[v], index[w], attrs["i"]] for v, w, attrs in data.graph.edges(data=True)),
        "connected": data.is_connected(),
    }


def poly_json(p: MultiPoly) -> dict:
    return p.to_json()


def shiftable_json(z: Involution) -> dict:
    return shiftable_data(z).to_json()


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    logger.info(f"Wrote {len(text)} bytes to {path}")


def export_text(kind: str, z: Involution = None, poly: MultiPoly = None) -> str:
    """
    Render an export as text: DOT for binv_plus_dot, sorted-key JSON otherwise.
    """
    if kind not in KINDS:
        raise UsageError(f"unknown export '{kind}', expected one of {KINDS}")
    if kind == "poly_json":
        if poly is None:
            raise UsageError("poly_json needs --w or --z")
        return dumps(poly_json(poly))
    if z is None:
        raise UsageError(f"{kind} needs --z")
    if kind == "binv_plus_dot":
        return binv_plus_dot(z)
    if kind == "binv_plus_json":
        return dumps(binv_plus_json(z))
    return dumps(shiftable_json(z))
