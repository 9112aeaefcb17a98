"""
Exact maximum independent sets.

`alpha_exact` is a branch-and-bound over bit-packed adjacency. Vertices are
branched in ascending order, including before excluding, and the incumbent
only changes on a strict improvement, so the witness is the lexicographically
smallest maximum independent set. The two oracles (subset DP and maximal
cliques of the complement) return the same witness.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Tuple

import networkx as nx

from ..const import EXHAUSTIVE_ORACLE_VERTICES, MAX_INDEPENDENCE_VERTICES
from ..errors import DomainError, IntegrityError
from ..gkgraph.model import PrimeGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependentSet:
    size: int
    witness: Tuple[int, ...]

    def __iter__(self) -> Iterator:
        return iter((self.size, self.witness))


class _BranchAndBound:
    def __init__(self, masks):
        self.masks = masks
        self.best_size = 0
        self.best_set = 0
        self.nodes = 0

    def visit(self, candidates: int, chosen: int, size: int) -> None:
        self.nodes += 1
        if not candidates:
            if size > self.best_size:
                self.best_size, self.best_set = size, chosen
            return
        if size + candidates.bit_count() <= self.best_size:
            return
        low = candidates & -candidates
        i = low.bit_length() - 1
        self.visit(candidates & ~self.masks[i] & ~low, chosen | low, size + 1)
        self.visit(candidates & ~low, chosen, size)


def _witness(g: PrimeGraph, chosen: int) -> Tuple[int, ...]:
    return tuple(v for i, v in enumerate(g.vertices) if chosen >> i & 1)


def _check_size(g: PrimeGraph, limit: int) -> None:
    if len(g) > limit:
        raise DomainError(f"{len(g)} vertices exceed the limit of {limit}")


def verify_independent(g: PrimeGraph, vertices: Tuple[int, ...]) -> bool:
    return all(
        not g.adjacent(a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
    )


def _search(g: PrimeGraph, chosen: int, candidates: int) -> IndependentSet:
    bb = _BranchAndBound(g.masks())
    bb.visit(candidates, chosen, chosen.bit_count())
    witness = _witness(g, bb.best_set)
    logger.debug(
        f"branch and bound: {bb.nodes} nodes, alpha={bb.best_size}, "
        f"witness={witness}"
    )
    if not verify_independent(g, witness):
        raise IntegrityError(f"witness {witness} is not independent")
    return IndependentSet(size=bb.best_size, witness=witness)


def alpha_exact(g: PrimeGraph) -> IndependentSet:
    """Independence number with the lexicographically smallest witness."""
    _check_size(g, MAX_INDEPENDENCE_VERTICES)
    return _search(g, 0, (1 << len(g)) - 1)


def t2(g: PrimeGraph) -> IndependentSet:
    """Largest independent set containing the vertex 2."""
    _check_size(g, MAX_INDEPENDENCE_VERTICES)
    if 2 not in g:
        raise DomainError("2 is not a vertex")
    i = g.index(2)
    bit = 1 << i
    everything = (1 << len(g)) - 1
    return _search(g, bit, everything & ~g.masks()[i] & ~bit)


def alpha_exhaustive(g: PrimeGraph) -> IndependentSet:
    """
    Subset DP over all 2^|V| vertex sets:
    alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v])) for the lowest v in S.
    """
    _check_size(g, EXHAUSTIVE_ORACLE_VERTICES)
    masks = g.masks()
    n = len(g)
    alpha = bytearray(1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        i = low.bit_length() - 1
        alpha[s] = max(alpha[s ^ low], 1 + alpha[s & ~masks[i] & ~low])

    # Walk back, taking the lowest vertex whenever a maximum set allows it.
    chosen, s = 0, (1 << n) - 1
    while s:
        low = s & -s
        i = low.bit_length() - 1
        rest = s & ~masks[i] & ~low
        if 1 + alpha[rest] == alpha[s]:
            chosen |= low
            s = rest
        else:
            s ^= low
    return IndependentSet(size=alpha[-1], witness=_witness(g, chosen))


def alpha_cliques(g: PrimeGraph) -> IndependentSet:
    """Maximum cliques of the complement graph, via networkx."""
    if not len(g):
        return IndependentSet(size=0, witness=())
    complement = nx.complement(g.to_networkx())
    best = min(
        (tuple(sorted(c)) for c in nx.find_cliques(complement)),
        key=lambda c: (-len(c), c),
    )
    return IndependentSet(size=len(best), witness=best)
