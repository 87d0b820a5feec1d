"""Linearity, uniformity, density classes and the extremal-structure checks."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import PreconditionViolated
from .model import Hypergraph, SqrtGate


class DensityClass(enum.Enum):
    DENSE = "Dense"
    SLIGHTLY_WEAKLY_DENSE = "SlightlyWeaklyDense"
    WEAKLY_DENSE = "WeaklyDense"
    NOT_WEAKLY_DENSE = "NotWeaklyDense"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DensityReport:
    density_class: DensityClass
    violations: list[tuple[int, list[int]]] = field(default_factory=list)
    degree_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def is_weakly_dense(self) -> bool:
        return self.density_class is not DensityClass.NOT_WEAKLY_DENSE


@dataclass(frozen=True)
class Lemma2Report:
    """Flags for the five conclusions on extremal instances.

    All five are true exactly when the instance has ``n`` edges, every edge
    has ``sqrt(n)+1`` vertices, every degree is ``sqrt(n)``, every two edges
    meet in exactly one vertex, and every vertex outside an edge is
    non-adjacent to exactly one vertex of that edge.
    """

    edge_count_is_n: bool
    all_edges_size_sqrtn_plus_1: bool
    all_degrees_sqrtn: bool
    pairwise_intersections_exactly_one: bool
    unique_nonneighbor_per_outside_vertex: bool
    first_failure: Optional[str] = None

    @property
    def all_hold(self) -> bool:
        return (
            self.edge_count_is_n
            and self.all_edges_size_sqrtn_plus_1
            and self.all_degrees_sqrtn
            and self.pairwise_intersections_exactly_one
            and self.unique_nonneighbor_per_outside_vertex
        )


def linearity_witness(H: Hypergraph) -> Optional[tuple[int, int]]:
    """First pair of edge indexes sharing two or more vertices, if any."""
    # scan vertex pairs through incidence: two edges share >= 2 vertices iff
    # some vertex pair is covered twice
    seen: dict[tuple[int, int], int] = {}
    best: Optional[tuple[int, int]] = None
    for j, e in enumerate(H.edges):
        for pair in combinations(e, 2):
            prev = seen.get(pair)
            if prev is None:
                seen[pair] = j
            elif best is None or (prev, j) < best:
                best = (prev, j)
    return best


def is_linear(H: Hypergraph) -> tuple[bool, Optional[tuple[int, int]]]:
    w = linearity_witness(H)
    return w is None, w


def is_uniform(H: Hypergraph, n: int) -> bool:
    if n < 1:
        raise ValueError("uniformity parameter must be >= 1")
    return all(len(e) == n for e in H.edges)


def degree_histogram(H: Hypergraph) -> dict[int, int]:
    return dict(sorted(Counter(H.degrees()).items()))


def density_report(H: Hypergraph, n: int) -> DensityReport:
    gate = SqrtGate(n)
    degs = H.degrees()
    hist = degree_histogram(H)

    violations = []
    for k in gate.weak_interval():
        if hist.get(k, 0) > k * k:
            violations.append((k, [v for v, d in enumerate(degs) if d == k]))

    if violations:
        cls = DensityClass.NOT_WEAKLY_DENSE
    elif not any(gate.in_closed_interval(d) for d in hist):
        cls = DensityClass.DENSE
    elif not any(gate.in_weak_interval(d) for d in hist):
        cls = DensityClass.SLIGHTLY_WEAKLY_DENSE
    else:
        cls = DensityClass.WEAKLY_DENSE
    return DensityReport(cls, violations, hist)


def is_dense(H: Hypergraph, n: int) -> bool:
    gate = SqrtGate(n)
    return not any(gate.in_closed_interval(d) for d in H.degrees())


def is_slightly_weakly_dense(H: Hypergraph, n: int) -> bool:
    gate = SqrtGate(n)
    return not any(gate.in_weak_interval(d) for d in H.degrees())


def is_weakly_dense(H: Hypergraph, n: int) -> bool:
    gate = SqrtGate(n)
    hist = Counter(H.degrees())
    return all(hist[k] <= k * k for k in hist if gate.in_weak_interval(k))


def check_lemma1_hypotheses(H: Hypergraph, n: int) -> None:
    """Raise PreconditionViolated unless H is linear with <= n edges of size <= n and min degree >= sqrt(n)."""
    gate = SqrtGate(n)
    ok, w = is_linear(H)
    if not ok:
        raise PreconditionViolated(f"not linear: edges {w[0]} and {w[1]} share two or more vertices")
    if H.edge_count > n:
        raise PreconditionViolated(f"{H.edge_count} edges exceed n={n}")
    for j, e in enumerate(H.edges):
        if len(e) > n:
            raise PreconditionViolated(f"edge {j} has {len(e)} vertices, more than n={n}")
    if H.vertex_count and not gate.ge(H.min_degree()):
        raise PreconditionViolated(f"min degree {H.min_degree()} is below sqrt({n})")


def lemma1_bound_holds(H: Hypergraph, n: int) -> tuple[bool, Optional[int]]:
    """Check every edge size s against (s-1)^2 <= n, strict when a member has degree above sqrt(n).

    Returns ``(True, None)`` or ``(False, edge_index)``.
    """
    check_lemma1_hypotheses(H, n)
    gate = SqrtGate(n)
    if gate.is_square:
        def high(d: int) -> bool:
            return d >= gate.isqrt + 1
    else:
        high = gate.gt

    for j, e in enumerate(H.edges):
        s = len(e)
        if (s - 1) ** 2 > n:
            return False, j
        if any(high(H.degree(v)) for v in e) and not (s - 1) ** 2 < n:
            return False, j
    return True, None


def special_vertex_ok(H: Hypergraph, n: int, v: int) -> bool:
    """d(v)^2 == n and |adj(u)| == n for u in adj(v) and v itself."""
    if H.degree(v) ** 2 != n:
        return False
    if len(H.adjacency(v)) != n:
        return False
    return all(len(H.adjacency(u)) == n for u in H.adjacency(v))


def check_lemma2_hypotheses(H: Hypergraph, n: int, v: int) -> None:
    check_lemma1_hypotheses(H, n)
    H._check_vertex(v)
    if H.degree(v) ** 2 != n:
        raise PreconditionViolated(f"degree of vertex {v} is {H.degree(v)}, its square is not n={n}")
    for u in sorted(H.adjacency(v) | {v}):
        if len(H.adjacency(u)) != n:
            raise PreconditionViolated(f"|adj({u})| = {len(H.adjacency(u))}, expected n={n}")


def lemma2_report(H: Hypergraph, n: int, v: int) -> Lemma2Report:
    """Exhaustively evaluate the five extremal conclusions around vertex ``v``."""
    check_lemma2_hypotheses(H, n, v)
    gate = SqrtGate(n)
    r = gate.isqrt
    failures: list[str] = []

    f1 = H.edge_count == n
    if not f1:
        failures.append(f"edge count {H.edge_count} != {n}")

    f2 = True
    for j, e in enumerate(H.edges):
        if len(e) != r + 1:
            f2 = False
            failures.append(f"edge {j} has size {len(e)}, expected {r + 1}")
            break

    f3 = True
    for u in H.vertices:
        if H.degree(u) != r:
            f3 = False
            failures.append(f"vertex {u} has degree {H.degree(u)}, expected {r}")
            break

    f4 = True
    sets = [frozenset(e) for e in H.edges]
    for a, b in combinations(range(H.edge_count), 2):
        if len(sets[a] & sets[b]) != 1:
            f4 = False
            failures.append(f"edges {a} and {b} share {len(sets[a] & sets[b])} vertices")
            break

    f5 = True
    for j, e in enumerate(sets):
        for u in H.vertices:
            if u in e:
                continue
            non_adj = [w for w in e if w not in H.adjacency(u)]
            if len(non_adj) != 1:
                f5 = False
                failures.append(f"vertex {u} is non-adjacent to {len(non_adj)} vertices of edge {j}")
                break
        if not f5:
            break

    return Lemma2Report(f1, f2, f3, f4, f5, failures[0] if failures else None)
