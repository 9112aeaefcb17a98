"""
Test fixtures and utilities for gkod tests.

Graph builders for the independence-number oracles and small helpers shared
by several test modules.
"""

import random
from typing import Iterable, List

from gkod.gkgraph import PrimeGraph

RANDOM_GRAPH_SEED = 20240601


def complete_graph(vertices: Iterable[int]) -> PrimeGraph:
    vs = sorted(vertices)
    return PrimeGraph.from_edges(
        vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]]
    )


def edgeless_graph(vertices: Iterable[int]) -> PrimeGraph:
    return PrimeGraph.from_edges(sorted(vertices), [])


def random_graph(rng: random.Random, max_vertices: int = 18) -> PrimeGraph:
    """A G(n, p) graph on 2..n+1 with n and p drawn from rng."""
    n = rng.randint(1, max_vertices)
    p = rng.choice((0.1, 0.25, 0.5, 0.75, 0.9))
    vs = list(range(2, n + 2))
    edges = [
        (a, b)
        for i, a in enumerate(vs)
        for b in vs[i + 1 :]
        if rng.random() < p
    ]
    return PrimeGraph.from_edges(vs, edges)


def random_graphs(
    count: int, seed: int = RANDOM_GRAPH_SEED
) -> List[PrimeGraph]:
    rng = random.Random(seed)
    return [random_graph(rng) for _ in range(count)]
