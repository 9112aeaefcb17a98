"""
Prime graph data model.

A PrimeGraph is immutable: vertices are ascending primes, edges are stored
once as (smaller, larger) pairs and odd vertices carry their label k, the
multiplicative order of 2 modulo the prime.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from ..errors import DomainError

Edge = Tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PrimeGraph:
    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge] = field(default_factory=frozenset)
    labels: Dict[int, int] = field(
        default_factory=dict,
        metadata={"doc": "k = ord_p(2) per odd vertex; vertex 2 has none"},
    )

    def __post_init__(self):
        if list(self.vertices) != sorted(set(self.vertices)):
            raise DomainError(f"vertices must ascend: {self.vertices}")
        known = set(self.vertices)
        for a, b in self.edges:
            if a >= b:
                raise DomainError(f"edge ({a}, {b}) is not normalized")
            if a not in known or b not in known:
                raise DomainError(f"edge ({a}, {b}) leaves the vertex set")
        if 2 in self.labels:
            raise DomainError("vertex 2 carries no label")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[int],
        edges: Iterable[Edge],
        labels: Optional[Dict[int, int]] = None,
    ) -> "PrimeGraph":
        return cls(
            vertices=tuple(sorted(vertices)),
            edges=frozenset(_edge(a, b) for a, b in edges if a != b),
            labels=dict(labels or {}),
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def adjacent(self, a: int, b: int) -> bool:
        return a != b and _edge(a, b) in self.edges

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(u for u in self.vertices if self.adjacent(u, v))

    def degree(self, v: int) -> int:
        if v not in self.vertices:
            raise DomainError(f"{v} is not a vertex")
        return sum(1 for e in self.edges if v in e)

    def edge_list(self) -> List[Edge]:
        return sorted(self.edges)

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def masks(self) -> List[int]:
        """Neighbourhood bitmasks indexed like `vertices`."""
        position = {v: i for i, v in enumerate(self.vertices)}
        masks = [0] * len(self.vertices)
        for a, b in self.edges:
            masks[position[a]] |= 1 << position[b]
            masks[position[b]] |= 1 << position[a]
        return masks

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edge_list())
        return graph


@dataclass(frozen=True)
class DegreePattern:
    """Vertex degrees listed by ascending prime."""

    degrees: Tuple[int, ...]
    vertices: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.degrees)
        if self.vertices is not None and len(self.vertices) != n:
            raise DomainError(
                f"{n} degrees for {len(self.vertices)} vertices"
            )
        for d in self.degrees:
            if not 0 <= d <= max(n - 1, 0):
                raise DomainError(f"degree {d} out of range for {n} vertices")

    @classmethod
    def of(cls, *degrees: int) -> "DegreePattern":
        return cls(tuple(degrees))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def degree_of(self, p: int) -> int:
        if self.vertices is None or p not in self.vertices:
            raise DomainError(f"{p} is not a vertex of this pattern")
        return self.degrees[self.vertices.index(p)]

    def as_dict(self) -> Dict[int, int]:
        if self.vertices is None:
            raise DomainError("pattern carries no vertices")
        return dict(zip(self.vertices, self.degrees))

    def adjusted(self, p: int, delta: int) -> "DegreePattern":
        """Copy with the degree of vertex p changed by delta."""
        self.degree_of(p)
        i = self.vertices.index(p)
        degrees = list(self.degrees)
        degrees[i] += delta
        return DegreePattern(tuple(degrees), self.vertices)

    def __str__(self) -> str:
        return "(" + ", ".join(str(d) for d in self.degrees) + ")"
