"""DOT export for prime graphs."""

from typing import List

from .model import PrimeGraph


def to_dot(g: PrimeGraph, name: str = "GK") -> str:
    """
    Deterministic DOT text: one line per vertex in ascending order, then one
    line per edge sorted by (smaller, larger).
    """
    lines: List[str] = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {a} -- {b};" for a, b in g.edge_list())
    lines.append("}")
    return "\n".join(lines) + "\n"
