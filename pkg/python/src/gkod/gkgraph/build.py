"""
Construction of GK(L_n(2)) and its degree data.

For odd primes r, s with k = ord_r(2) <= l = ord_s(2):

- r ~ s iff k + l <= n or k divides l;
- 2 ~ r iff k <= n - 2.

Degrees are also available from closed forms in terms of ppd sets, which
gives an independent check on the edge construction.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..arith.model import require_natural
from ..errors import DomainError
from ..factor import FactorCache
from ..orders import order_Ln2
from ..ppd import pi_of_mersenne, ppd_set
from .model import DegreePattern, PrimeGraph

logger = logging.getLogger(__name__)


def vertex_labels(
    n: int, cache: Optional[FactorCache] = None
) -> Dict[int, int]:
    """k = ord_p(2) for every odd prime p of |L_n(2)|."""
    labels = {}
    for k in range(2, n + 1):
        for p in ppd_set(k, cache):
            labels[p] = k
    return labels


def adjacent_by_criterion(n: int, k: Optional[int], l: Optional[int]) -> bool:
    """Adjacency from labels; None stands for vertex 2."""
    if k is None and l is None:
        return False
    if k is None or l is None:
        return (l if k is None else k) <= n - 2
    k, l = min(k, l), max(k, l)
    return k + l <= n or l % k == 0


@lru_cache(maxsize=64)
def _build(n: int) -> PrimeGraph:
    return _build_with(n, None)


def _build_with(n: int, cache: Optional[FactorCache]) -> PrimeGraph:
    labels = vertex_labels(n, cache)
    vertices = sorted({2, *labels})
    edges = [
        (a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
        if adjacent_by_criterion(n, labels.get(a), labels.get(b))
    ]
    graph = PrimeGraph.from_edges(vertices, edges, labels)
    logger.debug(
        f"GK(L_{n}(2)): {len(graph)} vertices, {len(graph.edges)} edges"
    )
    return graph


def build_gk_Ln2(n: int, cache: Optional[FactorCache] = None) -> PrimeGraph:
    """
    GK(L_n(2)). For n = 2 this is the edgeless graph on {2, 3}: L_2(2) is S_3,
    which has no element of order 6.
    """
    require_natural(n, "n", minimum=2)
    if n == 2:
        return PrimeGraph.from_edges((2, 3), (), {3: 2})
    if cache is None:
        return _build(n)
    return _build_with(n, cache)


def degree_pattern(g: PrimeGraph) -> DegreePattern:
    return DegreePattern(
        tuple(g.degree(v) for v in g.vertices), vertices=g.vertices
    )


def _ppd_union(lo: int, hi: int, cache: Optional[FactorCache]) -> Set[int]:
    return {p for i in range(lo, hi + 1) for p in ppd_set(i, cache)}


def degree_by_formula(
    n: int, r: int, cache: Optional[FactorCache] = None
) -> int:
    """
    deg(r) in GK(L_n(2)) from closed forms:

    - r = 2: |pi(L)| - |ppd(n-1) u ppd(n)| - 1
    - k in {n-1, n}: |pi(2^k - 1)| - 1
    - k <= n/2: |ppd(2) u ... u ppd(n-k)| + |ppd(floor(n/k)*k)|
    - otherwise: |pi(2^k - 1) u ppd(2) u ... u ppd(n-k)|
    """
    require_natural(n, "n", minimum=2)
    primes = order_Ln2(n, cache).primes()
    if r not in primes:
        raise DomainError(f"{r} does not divide |L_{n}(2)|")
    if r == 2:
        top = _ppd_union(max(n - 1, 2), n, cache)
        return len(primes) - len(top) - 1
    k = vertex_labels(n, cache)[r]
    if k >= n - 1:
        return len(pi_of_mersenne(k, cache)) - 1
    low = _ppd_union(2, n - k, cache)
    if 2 * k <= n:
        return len(low) + len(ppd_set((n // k) * k, cache))
    return len(low | set(pi_of_mersenne(k, cache)))


def omega_sets(d: DegreePattern) -> Dict[int, Tuple[int, ...]]:
    """
    Vertices grouped by degree, keyed 0..|d|-1; empty sets are kept so that
    Omega_i can be read for every i.
    """
    if d.vertices is None:
        raise DomainError("omega sets need a pattern with vertices")
    groups: Dict[int, List[int]] = {i: [] for i in range(len(d))}
    for p, deg in zip(d.vertices, d.degrees):
        groups[deg].append(p)
    return {i: tuple(ps) for i, ps in groups.items()}


def connected_components(g: PrimeGraph) -> List[Tuple[int, ...]]:
    """Components as ascending tuples, the one holding 2 first."""
    parts = [tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())]
    parts.sort(key=lambda c: (2 not in c, c[0]))
    return parts


def is_subgraph(g1: PrimeGraph, g2: PrimeGraph) -> bool:
    """Vertex and edge inclusion of g1 in g2."""
    return set(g1.vertices) <= set(g2.vertices) and g1.edges <= g2.edges
