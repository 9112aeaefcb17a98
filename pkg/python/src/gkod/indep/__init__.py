"""Independence numbers of prime graphs and degree-sequence bounds."""

from .bounds import BoundValue, caro_wei, majorized, t_lower_bound
from .search import (
    IndependentSet,
    alpha_cliques,
    alpha_exact,
    alpha_exhaustive,
    t2,
    verify_independent,
)

__all__ = [
    "BoundValue",
    "IndependentSet",
    "alpha_cliques",
    "alpha_exact",
    "alpha_exhaustive",
    "caro_wei",
    "majorized",
    "t2",
    "t_lower_bound",
    "verify_independent",
]
