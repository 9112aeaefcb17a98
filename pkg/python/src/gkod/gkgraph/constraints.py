"""
Degree constraints that GK(Aut(S)) inherits from GK(S) when |Aut(S):S| = 2.

Removing 2 leaves the graph unchanged, so an odd vertex can only gain the
edge to 2, and only if it did not already have it. Vertex 2 can only gain
edges.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

from ..errors import DomainError
from ..indep.bounds import majorized
from .model import DegreePattern, PrimeGraph


@dataclass(frozen=True)
class AutConstraintReport:
    passed: bool
    violations: Tuple[str, ...] = ()
    majorized: bool = True

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class AutDegreeBounds:
    lower: DegreePattern
    upper: DegreePattern
    isolated: Tuple[int, ...] = field(default=())


def aut_degree_bounds(
    g_S: PrimeGraph, isolated: Iterable[int] = ()
) -> AutDegreeBounds:
    """
    Per-vertex degree range for GK(Aut(S)). Vertices in `isolated` are known
    to stay outside the component of 2 (for example a Mersenne prime forming
    its own order component of Aut(S)).
    """
    isolated = tuple(sorted(isolated))
    unknown = set(isolated) - set(g_S.vertices)
    if unknown:
        raise DomainError(f"isolated primes {sorted(unknown)} are not vertices")
    lower = [g_S.degree(v) for v in g_S.vertices]
    upper = list(lower)
    for i, r in enumerate(g_S.vertices):
        if r == 2 or g_S.adjacent(2, r) or r in isolated:
            continue
        upper[i] += 1
        upper[g_S.index(2)] += 1
    return AutDegreeBounds(
        lower=DegreePattern(tuple(lower), g_S.vertices),
        upper=DegreePattern(tuple(upper), g_S.vertices),
        isolated=isolated,
    )


def aut_constraints(
    g_S: PrimeGraph, d_aut_candidate: DegreePattern
) -> AutConstraintReport:
    """Check a candidate degree pattern of Aut(S) against GK(S)."""
    vertices = d_aut_candidate.vertices or g_S.vertices
    if tuple(vertices) != g_S.vertices:
        raise DomainError(
            f"vertex sets differ: {g_S.vertices} vs {tuple(vertices)}"
        )
    if len(d_aut_candidate) != len(g_S):
        raise DomainError("candidate pattern length differs from the graph")

    violations: List[str] = []
    for r, candidate in zip(g_S.vertices, d_aut_candidate.degrees):
        low = g_S.degree(r)
        high = low if g_S.adjacent(2, r) else low + 1
        if candidate < low:
            violations.append(f"deg({r}) = {candidate} < {low}")
        elif r != 2 and candidate > high:
            violations.append(f"deg({r}) = {candidate} > {high}")

    lower = [g_S.degree(v) for v in g_S.vertices]
    ordered = majorized(lower, d_aut_candidate.degrees)
    if not ordered:
        violations.append("GK(S) is not degree-majorized by the candidate")
    return AutConstraintReport(
        passed=not violations, violations=tuple(violations), majorized=ordered
    )
