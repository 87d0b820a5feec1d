"""Constructive colorings.

Three algorithms live here:

* :func:`partition_coloring` colors an extremal instance (every degree
  ``sqrt(n)``, edges of size ``sqrt(n)+1``) with ``sqrt(n)+1`` colors by
  splitting the vertices into the non-neighbourhoods of one edge's vertices.
* :func:`greedy_high_degree` colors a linear hypergraph of minimum degree
  at least ``sqrt(n)`` with ``n`` colors, first-fit in decreasing degree order.
* :func:`efl_coloring` colors a weakly dense linear ``n``-uniform hypergraph
  with ``n`` edges using exactly ``n`` colors, in three phases by degree class.

Every color choice is first-fit, so all results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .classify import (
    check_lemma1_hypotheses,
    check_lemma2_hypotheses,
    density_report,
    is_linear,
    special_vertex_ok,
)
from .errors import (
    GreedyStall,
    NotLinear,
    NotUniform,
    NotWeaklyDense,
    PartitionFailure,
    PreconditionViolated,
)
from .model import Coloring, Hypergraph, SqrtGate


@dataclass(frozen=True)
class PartitionClasses:
    base_edge: int
    classes: list[frozenset[int]]


@dataclass
class PhaseTrace:
    n: int
    v1: list[int] = field(default_factory=list)
    v2: list[int] = field(default_factory=list)
    v3: list[int] = field(default_factory=list)
    phase1_palette_used: int = 0
    phase1_routed_partition: bool = False
    phase2_order: list[int] = field(default_factory=list)
    phase2_slack: list[Fraction] = field(default_factory=list)
    # colored neighbours actually seen when each phase-2 vertex was colored
    phase2_colored_neighbors: list[int] = field(default_factory=list)
    phase3_kE: list[int] = field(default_factory=list)
    phase3_uncolored: list[int] = field(default_factory=list)
    # the sub-hypergraph colored in phase 1 (None when no vertex has degree >= sqrt(n))
    h1: Optional[Hypergraph] = None


def _first_free(taken: set[int], palette_size: int) -> Optional[int]:
    for c in range(palette_size):
        if c not in taken:
            return c
    return None


def _neighbour_colors(H: Hypergraph, v: int, colors: Sequence[Optional[int]]) -> set[int]:
    return {colors[u] for u in H.adjacency(v) if colors[u] is not None}


def detect_special_vertex(H: Hypergraph, n: int) -> Optional[int]:
    """Smallest v with d(v)^2 == n and |adj(u)| == n for all u in adj(v) + {v}."""
    if not SqrtGate(n).is_square:
        return None
    for v in H.vertices:
        if special_vertex_ok(H, n, v):
            return v
    return None


def partition_classes(H: Hypergraph, base_edge: int) -> PartitionClasses:
    if not 0 <= base_edge < H.edge_count:
        raise PreconditionViolated(f"base edge {base_edge} not in 0..{H.edge_count - 1}")
    base = H.edges[base_edge]
    classes = []
    for vi in base:
        adj = H.adjacency(vi)
        classes.append(frozenset(u for u in H.vertices if u == vi or u not in adj))
    return PartitionClasses(base_edge, classes)


def partition_coloring(H: Hypergraph, n: int, base_edge: int) -> tuple[Coloring, PartitionClasses]:
    """Color an extremal instance with isqrt(n)+1 colors, one per non-adjacency class."""
    v = detect_special_vertex(H, n)
    if v is None:
        raise PreconditionViolated("no vertex v with d(v)^2 = n and |adj(u)| = n around v")
    check_lemma2_hypotheses(H, n, v)

    parts = partition_classes(H, base_edge)
    colors: list[Optional[int]] = [None] * H.vertex_count
    for i, cls in enumerate(parts.classes):
        for u in cls:
            if colors[u] is not None:
                raise PartitionFailure(f"vertex {u} lies in classes {colors[u]} and {i}")
            colors[u] = i
    missing = [u for u, c in enumerate(colors) if c is None]
    if missing:
        raise PartitionFailure(f"vertex {missing[0]} lies in no class")
    return Coloring(tuple(colors), SqrtGate(n).isqrt + 1), parts


def greedy_order(H: Hypergraph) -> list[int]:
    """Degree descending, then |adj| descending, then id ascending."""
    return sorted(H.vertices, key=lambda v: (-H.degree(v), -len(H.adjacency(v)), v))


def greedy_high_degree(H: Hypergraph, n: int) -> Coloring:
    """n-color a linear hypergraph with <= n edges of size <= n and min degree >= sqrt(n)."""
    check_lemma1_hypotheses(H, n)
    special = detect_special_vertex(H, n)
    if special is not None:
        base = H.incidence[special][0]
        col, _ = partition_coloring(H, n, base)
        return Coloring(col.colors, n)

    colors: list[Optional[int]] = [None] * H.vertex_count
    for v in greedy_order(H):
        c = _first_free(_neighbour_colors(H, v, colors), n)
        if c is None:
            raise GreedyStall(v, n)
        colors[v] = c
    return Coloring(tuple(colors), n)


def case_a_bound(n: int, d: int) -> Fraction:
    """Upper bound d(n-d)/(d-1) on colored neighbours of a vertex with d^2 > n."""
    if d < 2 or d * d <= n:
        raise PreconditionViolated(f"case (a) needs d >= 2 and d^2 > n (got n={n}, d={d})")
    return Fraction(d * (n - d), d - 1)


def phase2_bound(
    H: Hypergraph, n: int, v_r: int, partial_coloring: Optional[Coloring] = None
) -> Fraction:
    """n - d + i/d, where i counts other degree-d vertices on the edges through v_r.

    ``partial_coloring`` is accepted for call-site symmetry; the bound depends
    only on degrees.
    """
    d = H.degree(v_r)
    if not SqrtGate(n).in_weak_interval(d):
        raise PreconditionViolated(f"phase-2 bound needs 2 <= d(v) < sqrt(n) (d={d}, n={n})")
    i = 0
    for j in H.incidence[v_r]:
        i += sum(1 for u in H.edges[j] if u != v_r and H.degree(u) == d)
    return Fraction(n - d) + Fraction(i, d)


def restrict(H: Hypergraph, keep: Sequence[int]) -> tuple[Hypergraph, list[int]]:
    """Sub-hypergraph on ``keep`` with edges E & keep (nonempty ones, duplicates kept).

    Returns the relabelled hypergraph and the list mapping new ids to old ids.
    """
    old_ids = sorted(keep)
    new_id = {v: k for k, v in enumerate(old_ids)}
    edges = []
    for e in H.edges:
        sub = [new_id[v] for v in e if v in new_id]
        if sub:
            edges.append(sub)
    return Hypergraph(len(old_ids), edges), old_ids


def efl_coloring(H: Hypergraph) -> tuple[Coloring, PhaseTrace]:
    """Color a weakly dense linear n-uniform hypergraph with n edges using n colors."""
    n = H.edge_count
    if n < 1:
        raise PreconditionViolated("hypergraph has no edges")
    bad = [j for j, e in enumerate(H.edges) if len(e) != n]
    if bad:
        raise NotUniform(f"edge {bad[0]} has {len(H.edges[bad[0]])} vertices, expected {n}")
    ok, w = is_linear(H)
    if not ok:
        raise NotLinear(f"edges {w[0]} and {w[1]} share two or more vertices")
    report = density_report(H, n)
    if not report.is_weakly_dense:
        raise NotWeaklyDense(report.violations)

    gate = SqrtGate(n)
    trace = PhaseTrace(n=n)
    for v in H.vertices:
        d = H.degree(v)
        if gate.ge(d):
            trace.v1.append(v)
        elif d >= 2:
            trace.v2.append(v)
        else:
            trace.v3.append(v)

    colors: list[Optional[int]] = [None] * H.vertex_count

    # phase 1: vertices of degree >= sqrt(n)
    if trace.v1:
        h1, old_ids = restrict(H, trace.v1)
        trace.h1 = h1
        trace.phase1_routed_partition = detect_special_vertex(h1, n) is not None
        c1 = greedy_high_degree(h1, n)
        for k, v in enumerate(old_ids):
            colors[v] = c1[k]
        trace.phase1_palette_used = len(c1.colors_used())

    # phase 2: 2 <= d < sqrt(n), decreasing degree
    trace.phase2_order = sorted(trace.v2, key=lambda v: (-H.degree(v), v))
    for v in trace.phase2_order:
        trace.phase2_slack.append(phase2_bound(H, n, v))
        taken = _neighbour_colors(H, v, colors)
        trace.phase2_colored_neighbors.append(sum(1 for u in H.adjacency(v) if colors[u] is not None))
        c = _first_free(taken, n)
        if c is None:
            raise GreedyStall(v, n)
        colors[v] = c

    # phase 3: each remaining vertex lies in a single edge
    for e in H.edges:
        used = {colors[u] for u in e if colors[u] is not None}
        pending = [u for u in e if colors[u] is None]
        trace.phase3_kE.append(len(e) - len(pending))
        trace.phase3_uncolored.append(len(pending))
        free = (c for c in range(n) if c not in used)
        for u in pending:
            c = next(free, None)
            if c is None:
                raise GreedyStall(u, n)
            colors[u] = c

    return Coloring(tuple(colors), n), trace


def is_rainbow(H: Hypergraph, coloring: Coloring, palette_size: Optional[int] = None) -> bool:
    """Every edge carries each color of ``range(palette_size)`` exactly once."""
    k = coloring.palette_size if palette_size is None else palette_size
    full = list(range(k))
    return all(sorted(coloring[v] for v in e) == full for e in H.edges)

