"""Instance builders: dual affine planes, pencils and seeded random linear hypergraphs.

Randomness comes from :class:`SplitMix64` (Steele, Lea and Flood, 2014), a
64-bit generator small enough to re-implement anywhere, so a ``(n, seed)``
pair names the same instance in every port. Bounded draws use rejection
sampling on the raw 64-bit output; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .classify import density_report
from .errors import ExhaustedAttempts, NotPrime
from .model import Hypergraph

MASK64 = (1 << 64) - 1

# reuse probabilities in 1/256 units: vertices already of degree >= 2 are
# reused eagerly, degree-1 vertices rarely and at most LEAF_PROMOTIONS per edge
REUSE_HUB = 240
REUSE_LEAF = 64
LEAF_PROMOTIONS = 1

DEFAULT_ATTEMPTS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        # Fisher-Yates, last index first
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th member of a stream rooted at ``seed``."""
    return SplitMix64((seed + index * 0x9E3779B97F4A7C15) & MASK64).next_u64()


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def dual_affine_plane(q: int) -> Hypergraph:
    """Lines of AG(2, q) as vertices, points as edges.

    Vertex ``m*q + b`` is the line y = m*x + b; vertex ``q*q + c`` is x = c.
    Edge ``x*q + y`` holds the q+1 lines through the point (x, y).
    """
    if not _is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    edges = []
    for x in range(q):
        for y in range(q):
            lines = [m * q + (y - m * x) % q for m in range(q)]
            lines.append(q * q + x)
            edges.append(lines)
    return Hypergraph(q * q + q, edges)


def pencil(n: int) -> Hypergraph:
    """n edges through vertex 0, each padded with n-1 private vertices."""
    if n < 1:
        raise ValueError("pencil needs n >= 1")
    edges = []
    nxt = 1
    for _ in range(n):
        edges.append([0] + list(range(nxt, nxt + n - 1)))
        nxt += n - 1
    return Hypergraph(nxt, edges)


def random_linear_uniform(n: int, seed: int) -> Hypergraph:
    """Random linear n-uniform hypergraph with n edges.

    Edges are built one at a time. Existing vertices are visited in a
    shuffled order, stable-sorted by current degree (highest first). A vertex
    is a candidate only if it shares no earlier edge with a vertex already
    chosen, which keeps every pair of edges meeting in at most one vertex.
    Candidates of degree >= 2 are taken with probability REUSE_HUB/256;
    degree-1 candidates with probability REUSE_LEAF/256, at most
    LEAF_PROMOTIONS of them per edge. Fresh vertices fill the rest.
    """
    if n < 2:
        raise ValueError("random_linear_uniform needs n >= 2")
    rng = SplitMix64(seed)
    memberships: list[set[int]] = []
    edges: list[list[int]] = []
    for j in range(n):
        order = list(range(len(memberships)))
        rng.shuffle(order)
        order.sort(key=lambda v: -len(memberships[v]))
        chosen: list[int] = []
        touched: set[int] = set()
        promoted = 0
        for v in order:
            if len(chosen) == n:
                break
            if memberships[v] & touched:
                continue
            if len(memberships[v]) >= 2:
                take = rng.below(256) < REUSE_HUB
            else:
                take = promoted < LEAF_PROMOTIONS and rng.below(256) < REUSE_LEAF
                promoted += take
            if take:
                chosen.append(v)
                touched |= memberships[v]
        while len(chosen) < n:
            memberships.append(set())
            chosen.append(len(memberships) - 1)
        for v in chosen:
            memberships[v].add(j)
        edges.append(chosen)
    return Hypergraph(len(memberships), edges)


@dataclass
class StreamTally:
    accepted: int = 0
    rejected: int = 0


def weakly_dense_stream(
    n: int,
    seed: int,
    count: int,
    max_attempts: int = DEFAULT_ATTEMPTS,
    tally: Optional[StreamTally] = None,
) -> Iterator[Hypergraph]:
    """Yield the first ``count`` weakly dense draws of random_linear_uniform.

    Draw ``i`` uses ``derive_seed(seed, i)``. Pass a :class:`StreamTally` to
    observe the rejection count.
    """
    if n < 2 or count < 1:
        raise ValueError("weakly_dense_stream needs n >= 2 and count >= 1")
    tally = tally if tally is not None else StreamTally()
    for i in range(max_attempts):
        H = random_linear_uniform(n, derive_seed(seed, i))
        if density_report(H, n).is_weakly_dense:
            tally.accepted += 1
            yield H
            if tally.accepted == count:
                return
        else:
            tally.rejected += 1
    raise ExhaustedAttempts(f"only {tally.accepted} of {count} weakly dense instances in {max_attempts} draws")


def random_hypergraph(vertex_count: int, edge_count: int, seed: int, max_edge_size: int = 3) -> Hypergraph:
    """Small unstructured hypergraph for oracle checks (not necessarily linear).

    Every vertex is placed in some edge, then edges are topped up at random
    to a drawn size. ``edge_count`` is raised if needed so that no edge
    exceeds ``max_edge_size``.
    """
    if vertex_count < 1 or edge_count < 1 or max_edge_size < 1:
        raise ValueError("need at least one vertex, one edge and edge size >= 1")
    edge_count = max(edge_count, -(-vertex_count // max_edge_size))
    rng = SplitMix64(seed)
    sizes = [1 + rng.below(max_edge_size) for _ in range(edge_count)]
    edges: list[set[int]] = [set() for _ in range(edge_count)]
    verts = list(range(vertex_count))
    rng.shuffle(verts)
    for k, v in enumerate(verts):
        edges[k % edge_count].add(v)
    for e, s in zip(edges, sizes):
        while len(e) < min(s, vertex_count):
            e.add(rng.below(vertex_count))
    return Hypergraph(vertex_count, [sorted(e) for e in edges])
