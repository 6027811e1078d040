"""The wedge operators: glue k copies of a pattern along a shared vertex set.

Vertex numbering puts the shared vertices first (in pattern order), then the
copies in copy-major, pattern-order-minor sequence.  With that layout the
wedge at k is the induced subgraph of the wedge at k+1 on the first
k(|V(H)|-|Z|)+|Z| vertices, which is the monotonicity the duplicability scan
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import count_induced_copies
from .graphs import Graph
from .separations import IndependentCollection


@dataclass(frozen=True)
class WedgeResult:
    graph: Graph
    pattern: Graph
    shared: tuple[int, ...]  # shared pattern vertices, ascending
    copies: int
    copy_map: dict[tuple[int, int], int]  # (copy index, pattern vertex not in shared) -> vertex
    shared_map: dict[int, int]  # shared pattern vertex -> vertex

    def embedding(self, i: int) -> tuple[int, ...]:
        """Image of every pattern vertex under copy i."""
        return tuple(
            self.shared_map[v] if v in self.shared_map else self.copy_map[(i, v)]
            for v in range(self.pattern.n)
        )


def wedge_set(h: Graph, z, k: int) -> WedgeResult:
    """k disjoint copies of h with the vertices of z identified across copies."""
    if k < 1:
        raise ValueError("wedge needs at least one copy")
    zset = frozenset(z)
    if any(not 0 <= v < h.n for v in zset):
        raise ValueError("shared set contains out-of-range vertices")
    shared = tuple(sorted(zset))
    rest = [v for v in range(h.n) if v not in zset]
    shared_map = {v: i for i, v in enumerate(shared)}
    copy_map = {
        (i, v): len(shared) + i * len(rest) + j
        for i in range(k)
        for j, v in enumerate(rest)
    }

    def image(i: int, v: int) -> int:
        return shared_map[v] if v in shared_map else copy_map[(i, v)]

    edges = set()
    for i in range(k):
        for u, v in h.edges():
            a, b = image(i, u), image(i, v)
            edges.add((min(a, b), max(a, b)))
    n = k * (h.n - len(shared)) + len(shared)
    return WedgeResult(Graph(n, sorted(edges)), h, shared, k, copy_map, shared_map)


def shared_part(c: IndependentCollection) -> frozenset[int]:
    """Intersection of all B sides; the whole vertex set for the empty collection."""
    shared = frozenset(range(c.host.n))
    for m in c.members:
        shared &= m.b
    return shared


def wedge_collection(h: Graph, c: IndependentCollection, k: int) -> WedgeResult:
    if c.host != h:
        raise ValueError("collection is over a different host graph")
    return wedge_set(h, shared_part(c), k)


def verify_lower_bound(
    h: Graph, c: IndependentCollection, k: int, budget: int | None = None
) -> bool:
    """Check the duplication lower bound: the wedge holds >= k^|C| induced copies of h."""
    w = wedge_collection(h, c, k)
    return count_induced_copies(h, w.graph, budget=budget) >= k**c.size
