"""
Degree-pattern predicates.

A Frobenius group with a prime graph of two complete components has the shape
(n-2, ..., n-2, 0); a 2-Frobenius group splits into two complete components
of sizes a and b. Both depend only on the multiset of degrees.
"""

from collections import Counter
from typing import Sequence

from ..errors import DomainError


def frobenius_shape(d: Sequence[int]) -> bool:
    """Degrees are n-2 taken n-1 times and a single 0."""
    n = len(d)
    if n < 2:
        return False
    return Counter(d) == Counter([n - 2] * (n - 1) + [0])


def two_frobenius_shape(d: Sequence[int]) -> bool:
    """Degrees are a-1 taken a times and b-1 taken b times, a + b = n."""
    n = len(d)
    observed = Counter(d)
    return any(
        observed == Counter([a - 1] * a + [n - a - 1] * (n - a))
        for a in range(1, n)
    )


def nonsolvable_by_degrees(d: Sequence[int]) -> bool:
    """
    Omega_0 is nonempty and some Omega_i with 1 <= i <= |d| - 3 is nonempty.
    Sufficient for non-solvability; a False result says nothing.
    """
    if len(d) < 3:
        raise DomainError(f"need at least 3 vertices, got {len(d)}")
    present = set(d)
    return 0 in present and any(1 <= i <= len(d) - 3 for i in present)
