"""Separations, independent collections, essentiality, torsos, and flap numbers.

A separation of H is an ordered pair (A, B) covering V(H) with no edge between
A-B and B-A; a collection is independent when flaps are pairwise "one inside
the other's B side".  For essential collections every member is determined by
its flap A-B (the canonical encoding used here), and independence reduces to flaps
being pairwise disjoint and non-adjacent, which is what the enumerator works
with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import (
    Graph,
    _bits,
    _mask_of,
    closed_neighborhood,
    components,
)


@dataclass(frozen=True)
class Separation:
    a: frozenset[int]
    b: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.a & self.b)

    @property
    def flap(self) -> frozenset[int]:
        return self.a - self.b

    @property
    def boundary_set(self) -> frozenset[int]:
        return self.a & self.b


def order(s: Separation) -> int:
    return s.order


def is_separation(g: Graph, s: Separation) -> bool:
    if s.a | s.b != frozenset(range(g.n)):
        return False
    left = s.a - s.b
    right = s.b - s.a
    return all(not (g.adjacency_mask(v) & _mask_of(right)) for v in left)


@dataclass(frozen=True)
class IndependentCollection:
    host: Graph
    members: tuple[Separation, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def max_order(self) -> int:
        return max((m.order for m in self.members), default=0)

    @property
    def total_order(self) -> int:
        return sum(m.order for m in self.members)

    def flaps(self) -> tuple[frozenset[int], ...]:
        return tuple(m.flap for m in self.members)

    def sort_key(self) -> tuple:
        return tuple(sorted(tuple(sorted(f)) for f in self.flaps()))

    def to_json(self) -> dict:
        return {
            "host": {"n": self.host.n, "edges": [list(e) for e in self.host.edges()]},
            "flaps": [sorted(m.flap) for m in self.members],
        }


def collection_from_flaps(host: Graph, flaps) -> IndependentCollection:
    """Build the essential collection {(N[C], V-C) : C in flaps}, canonically sorted."""
    vs = frozenset(range(host.n))
    members = []
    for f in sorted((frozenset(f) for f in flaps), key=lambda f: sorted(f)):
        members.append(Separation(closed_neighborhood(host, f), vs - f))
    return IndependentCollection(host, tuple(members))


def collection_from_json(data) -> IndependentCollection:
    if isinstance(data, dict):
        hostinfo = data["host"]
        host = Graph(hostinfo["n"], [tuple(e) for e in hostinfo["edges"]])
        flaps = data["flaps"]
    else:
        raise ValueError("collection JSON must be an object with host and flaps")
    return collection_from_flaps(host, flaps)


def validate(c: IndependentCollection) -> bool:
    """Exhaustively check both invariants of an independent collection."""
    for m in c.members:
        if not is_separation(c.host, m):
            return False
        if not m.flap:
            return False
    for i, m1 in enumerate(c.members):
        for m2 in c.members[i + 1 :]:
            if m1 == m2:
                return False
            if not (m1.a <= m2.b and m2.a <= m1.b):
                return False
    return True


def is_essential(c: IndependentCollection) -> bool:
    """Every boundary vertex has a neighbor in the flap, and each flap is connected."""
    g = c.host
    for m in c.members:
        flap = m.flap
        fmask = _mask_of(flap)
        for v in m.boundary_set:
            if not (g.adjacency_mask(v) & fmask):
                return False
        sub, _ = g.induced_subgraph(flap)
        if len(components(sub)) != 1:
            return False
    return True


def essentialize(c: IndependentCollection) -> IndependentCollection:
    """Split every member along the components of its flap.

    The result is essential and independent, at least as large, and no member
    has larger order than the original member it came from.
    """
    flaps: list[frozenset[int]] = []
    for m in c.members:
        sub, vmap = c.host.induced_subgraph(m.flap)
        for comp in components(sub):
            flaps.append(frozenset(vmap[v] for v in comp))
    return collection_from_flaps(c.host, flaps)


# -- enumeration -------------------------------------------------------------


def _connected_subsets(g: Graph, within: int) -> Iterator[int]:
    """All masks of nonempty connected subsets of the vertices in ``within``."""

    def grow(s: int, forbidden: int) -> Iterator[int]:
        yield s
        frontier = 0
        for v in _bits(s):
            frontier |= g.adjacency_mask(v)
        frontier &= within & ~s & ~forbidden
        for u in _bits(frontier):
            yield from grow(s | (1 << u), forbidden)
            forbidden |= 1 << u

    seen_seeds = 0
    for seed in _bits(within):
        yield from grow(1 << seed, seen_seeds)
        seen_seeds |= 1 << seed


def candidate_flaps(h: Graph, max_order: int) -> list[frozenset[int]]:
    """Connected C with |N(C)| <= max_order, each giving the separation (N[C], V-C)."""
    full = (1 << h.n) - 1
    out = []
    for mask in _connected_subsets(h, full):
        nb = 0
        for v in _bits(mask):
            nb |= h.adjacency_mask(v)
        if (nb & ~mask).bit_count() <= max_order:
            out.append(frozenset(_bits(mask)))
    out.sort(key=sorted)
    return out


def enumerate_essential_collections(
    h: Graph, max_order: int, include_empty: bool = False
) -> Iterator[IndependentCollection]:
    """All nonempty essential independent collections of order <= max_order.

    Each collection appears exactly once, as a canonically sorted member tuple.
    For essential members independence is exactly "flaps pairwise disjoint and
    non-adjacent", so the search extends a sorted flap list by compatible later
    flaps.
    """
    if include_empty:
        yield IndependentCollection(h, ())
    flaps = candidate_flaps(h, max_order)
    masks = [_mask_of(f) for f in flaps]
    closed = []
    for f, m in zip(flaps, masks):
        nb = m
        for v in _bits(m):
            nb |= h.adjacency_mask(v)
        closed.append(nb)

    def rec(start: int, chosen: list[int], blocked: int) -> Iterator[IndependentCollection]:
        for i in range(start, len(flaps)):
            if masks[i] & blocked:
                continue
            chosen.append(i)
            yield collection_from_flaps(h, [flaps[j] for j in chosen])
            yield from rec(i + 1, chosen, blocked | closed[i])
            chosen.pop()

    yield from rec(0, [], 0)


def flap_number(h: Graph, d: int) -> int:
    """Maximum size of an independent collection of separations of order <= d.

    Computed over essential collections only: splitting members along flap
    components never shrinks a collection or raises its order, so the maximum
    is attained by an essential collection.
    """
    best = 0
    for c in enumerate_essential_collections(h, d):
        best = max(best, c.size)
    return best


# -- torsos ------------------------------------------------------------------


def central_torso(
    c: IndependentCollection,
) -> tuple[Graph, tuple[int, ...], frozenset[tuple[int, int]]]:
    """Torso of the shared side: H on the intersection of all B's, boundaries completed.

    Returns (graph, new->old vertex map, peripheral edges) where a peripheral
    edge is any torso edge (added or not) inside some member's A-and-B set.
    """
    h = c.host
    shared = frozenset(range(h.n))
    for m in c.members:
        shared &= m.b
    keep = sorted(shared)
    pos = {v: i for i, v in enumerate(keep)}
    edges = {(pos[u], pos[v]) for u, v in h.edges() if u in pos and v in pos}
    peripheral = set()
    for m in c.members:
        bd = sorted(m.boundary_set)
        for i, u in enumerate(bd):
            for v in bd[i + 1 :]:
                e = (min(pos[u], pos[v]), max(pos[u], pos[v]))
                edges.add(e)
                peripheral.add(e)
    return Graph(len(keep), sorted(edges)), tuple(keep), frozenset(peripheral)


def peripheral_torsos(c: IndependentCollection) -> list[tuple[Graph, tuple[int, ...]]]:
    """One torso per member: H[A] with A-and-B completed to a clique."""
    h = c.host
    out = []
    for m in c.members:
        keep = sorted(m.a)
        pos = {v: i for i, v in enumerate(keep)}
        edges = {(pos[u], pos[v]) for u, v in h.edges() if u in pos and v in pos}
        bd = sorted(m.boundary_set)
        for i, u in enumerate(bd):
            for v in bd[i + 1 :]:
                edges.add((min(pos[u], pos[v]), max(pos[u], pos[v])))
        out.append((Graph(len(keep), sorted(edges)), tuple(keep)))
    return out
