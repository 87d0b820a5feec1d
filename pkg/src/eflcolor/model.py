"""Hypergraph, Coloring and exact square-root comparisons.

Vertices are the contiguous ids ``0..vertex_count-1``. Edges form an indexed
family: two edges with the same vertex set are still separate entries and
both count toward degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DuplicateVertexInEdge,
    EmptyEdge,
    IsolatedVertex,
    VertexOutOfRange,
)

__all__ = ["Hypergraph", "Coloring", "SqrtGate", "build", "degree", "adjacency", "min_degree"]


class Hypergraph:
    """Immutable hypergraph with a cached vertex -> incident-edges index."""

    __slots__ = ("_n_vertices", "_edges", "_incidence", "_adjacency")

    def __init__(self, vertex_count: int, edge_lists: Iterable[Iterable[int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        edges = []
        for j, raw in enumerate(edge_lists):
            members = [int(v) for v in raw]
            if not members:
                raise EmptyEdge(f"edge {j} is empty")
            for v in members:
                if not 0 <= v < vertex_count:
                    raise VertexOutOfRange(f"edge {j} references vertex {v} (vertex_count={vertex_count})")
            ordered = sorted(members)
            for a, b in zip(ordered, ordered[1:]):
                if a == b:
                    raise DuplicateVertexInEdge(f"edge {j} lists vertex {a} twice")
            edges.append(tuple(ordered))

        incidence: list[list[int]] = [[] for _ in range(vertex_count)]
        for j, e in enumerate(edges):
            for v in e:
                incidence[v].append(j)
        for v, inc in enumerate(incidence):
            if not inc:
                raise IsolatedVertex(f"vertex {v} belongs to no edge")

        self._n_vertices = vertex_count
        self._edges = tuple(edges)
        self._incidence = tuple(tuple(inc) for inc in incidence)
        self._adjacency: Optional[tuple[frozenset[int], ...]] = None

    @property
    def vertex_count(self) -> int:
        return self._n_vertices

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self._edges

    @property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        return self._incidence

    @property
    def vertices(self) -> range:
        return range(self._n_vertices)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n_vertices:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self._n_vertices - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incidence[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self._incidence]

    def adjacency(self, v: int) -> frozenset[int]:
        """Vertices sharing an edge with ``v``; ``v`` itself is excluded."""
        self._check_vertex(v)
        if self._adjacency is None:
            adj = []
            for u, inc in enumerate(self._incidence):
                s = set()
                for j in inc:
                    s.update(self._edges[j])
                s.discard(u)
                adj.append(frozenset(s))
            self._adjacency = tuple(adj)
        return self._adjacency[v]

    def min_degree(self) -> int:
        if not self._n_vertices:
            raise ValueError("min_degree of an empty hypergraph")
        return min(len(inc) for inc in self._incidence)

    def max_edge_size(self) -> int:
        return max((len(e) for e in self._edges), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._n_vertices == other._n_vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n_vertices, self._edges))

    def __repr__(self) -> str:
        return f"Hypergraph(vertex_count={self._n_vertices}, edges={[list(e) for e in self._edges]})"


def build(vertex_count: int, edge_lists: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(vertex_count, edge_lists)


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def adjacency(H: Hypergraph, v: int) -> frozenset[int]:
    return H.adjacency(v)


def min_degree(H: Hypergraph) -> int:
    return H.min_degree()


@dataclass(frozen=True)
class Coloring:
    """Vertex colors (``None`` = uncolored) drawn from ``range(palette_size)``."""

    colors: tuple[Optional[int], ...]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors):
            if c is not None and not 0 <= c < self.palette_size:
                raise ValueError(f"vertex {v} has color {c} outside palette of size {self.palette_size}")

    @classmethod
    def from_mapping(cls, vertex_count: int, mapping: Mapping[int, int], palette_size: int) -> "Coloring":
        colors: list[Optional[int]] = [None] * vertex_count
        for v, c in mapping.items():
            colors[v] = c
        return cls(tuple(colors), palette_size)

    def __getitem__(self, v: int) -> Optional[int]:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def colors_used(self) -> set[int]:
        return {c for c in self.colors if c is not None}

    def as_dict(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c is not None}


@dataclass(frozen=True)
class SqrtGate:
    """Comparisons against sqrt(n) carried out on squares, never on floats."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("SqrtGate needs n >= 1")

    @property
    def isqrt(self) -> int:
        return math.isqrt(self.n)

    @property
    def is_square(self) -> bool:
        r = math.isqrt(self.n)
        return r * r == self.n

    def ge(self, d: int) -> bool:
        return d * d >= self.n

    def gt(self, d: int) -> bool:
        return d * d > self.n

    def eq(self, d: int) -> bool:
        return d * d == self.n

    def in_weak_interval(self, k: int) -> bool:
        """k in [2, sqrt(n))."""
        return k >= 2 and k * k < self.n

    def in_closed_interval(self, k: int) -> bool:
        """k in [2, sqrt(n)]."""
        return k >= 2 and k * k <= self.n

    def weak_interval(self) -> range:
        """All integers k with 2 <= k < sqrt(n)."""
        r = math.isqrt(self.n)
        top = r if r * r == self.n else r + 1
        return range(2, max(top, 2))


def edge_sizes(H: Hypergraph) -> Sequence[int]:
    return [len(e) for e in H.edges]
