"""Ground truth: proper-coloring validation and exact chromatic number."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import NoColoringWithinLimit, PartialColoring, TooLarge
from .model import Coloring, Hypergraph

DEFAULT_CAP = 24


@dataclass(frozen=True)
class ChiResult:
    chi: int
    witness: Coloring
    nodes_explored: int


def validate_coloring(H: Hypergraph, coloring: Coloring) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Return ``(True, None)`` or ``(False, (edge, u, u2))`` for the first clash.

    The witness names the first edge (by index) holding two equal colors and
    the first such pair inside it, ``u < u2``.
    """
    if len(coloring) != H.vertex_count or not coloring.is_total:
        raise PartialColoring("coloring does not assign every vertex")
    for j, e in enumerate(H.edges):
        seen: dict[int, int] = {}
        for u in e:
            c = coloring[u]
            if c in seen:
                return False, (j, seen[c], u)
            seen[c] = u
    return True, None


class _Search:
    def __init__(self, H: Hypergraph, k: int):
        self.H = H
        self.k = k
        self.order = sorted(H.vertices, key=lambda v: (-H.degree(v), v))
        self.colors: list[Optional[int]] = [None] * H.vertex_count
        self.nodes = 0

    def run(self) -> bool:
        return self._extend(0, -1)

    def _extend(self, pos: int, max_used: int) -> bool:
        if pos == len(self.order):
            return True
        self.nodes += 1
        v = self.order[pos]
        blocked = {self.colors[u] for u in self.H.adjacency(v)}
        # color classes are interchangeable: never open more than one new color
        for c in range(min(max_used + 2, self.k)):
            if c in blocked:
                continue
            self.colors[v] = c
            if self._extend(pos + 1, max(max_used, c)):
                return True
        self.colors[v] = None
        return False


def chromatic_number(H: Hypergraph, max_colors: Optional[int] = None, cap: int = DEFAULT_CAP) -> ChiResult:
    """Exact chromatic number by backtracking, trying k = max edge size upward."""
    if H.vertex_count > cap:
        raise TooLarge(f"{H.vertex_count} vertices exceed the search cap of {cap}")
    if max_colors is None:
        max_colors = max(H.vertex_count, 1)
    lower = max(H.max_edge_size(), 1)
    if max_colors < lower:
        raise NoColoringWithinLimit(f"an edge of size {lower} needs more than {max_colors} colors")
    nodes = 0
    for k in range(lower, max_colors + 1):
        search = _Search(H, k)
        found = search.run()
        nodes += search.nodes
        if found:
            return ChiResult(k, Coloring(tuple(search.colors), k), nodes)
    raise NoColoringWithinLimit(f"no proper coloring with at most {max_colors} colors")


def brute_force_chi(H: Hypergraph, limit: int = 8) -> int:
    """Chromatic number by enumerating every assignment, no pruning.

    Independent of :func:`chromatic_number`; only usable for tiny instances.
    """
    if H.vertex_count > limit:
        raise TooLarge(f"{H.vertex_count} vertices exceed the enumeration limit of {limit}")
    for k in range(1, H.vertex_count + 1):
        for assignment in product(range(k), repeat=H.vertex_count):
            if all(len({assignment[v] for v in e}) == len(e) for e in H.edges):
                return k
    return H.vertex_count
