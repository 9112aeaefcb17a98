"""Gruenberg-Kegel graphs of L_n(2): construction, degrees and export."""

from .model import DegreePattern, Edge, PrimeGraph
from .build import (
    adjacent_by_criterion,
    build_gk_Ln2,
    connected_components,
    degree_by_formula,
    degree_pattern,
    is_subgraph,
    omega_sets,
    vertex_labels,
)
from .constraints import (
    AutConstraintReport,
    AutDegreeBounds,
    aut_constraints,
    aut_degree_bounds,
)
from .dot import to_dot

__all__ = [
    "AutConstraintReport",
    "AutDegreeBounds",
    "DegreePattern",
    "Edge",
    "PrimeGraph",
    "adjacent_by_criterion",
    "aut_constraints",
    "aut_degree_bounds",
    "build_gk_Ln2",
    "connected_components",
    "degree_by_formula",
    "degree_pattern",
    "is_subgraph",
    "omega_sets",
    "to_dot",
    "vertex_labels",
]
