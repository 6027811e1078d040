"""Ordered hosts, basins, and per-homomorphism extraction of witness collections.

Given a host ordering and a deletion sequence, the p-basin at position i is the
radius-p ball around the i-th vertex inside the suffix graph with the deletion
set removed.  Walking a homomorphism through the positions and peeling the
pattern components mapped onto each pivot yields an independent collection of
separations of the pattern whose size bounds how many host vertices the
homomorphism can "spread" over; bounded-degeneracy orderings make every basin
a singleton, which is how the degenerate-class exponent drops out.

The protected-tail parameter of the underlying machinery is fixed to zero
here: positive values only matter for quantitative refinements that are out of
scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, ball, components, degeneracy
from .separations import IndependentCollection, Separation


@dataclass(frozen=True)
class OrderedHost:
    """A host graph with an ordering and a deletion sequence.

    ``order[i]`` is the vertex at (1-based) position i+1; ``deletion_sets[i]``
    is S_{i+1} and must sit strictly after position i+1 in the ordering.
    """

    graph: Graph
    order: tuple[int, ...]
    deletion_sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        n = self.graph.n
        if sorted(self.order) != list(range(n)):
            raise ValueError("order must be a permutation of the vertices")
        if len(self.deletion_sets) != n:
            raise ValueError("need one deletion set per position")
        pos = self.positions()
        for i, s in enumerate(self.deletion_sets, start=1):
            if any(pos[v] < i + 1 for v in s):
                raise ValueError(f"deletion set at position {i} reaches back into the prefix")

    def positions(self) -> dict[int, int]:
        """Vertex -> 1-based position."""
        return {v: i + 1 for i, v in enumerate(self.order)}

    def vertex_at(self, i: int) -> int:
        return self.order[i - 1]

    def max_deletion_size(self) -> int:
        return max((len(s) for s in self.deletion_sets), default=0)


def degeneracy_host(g: Graph) -> OrderedHost:
    """Degeneracy ordering with S_i = the later neighbors of the i-th vertex."""
    _, order = degeneracy(g)
    pos = {v: i + 1 for i, v in enumerate(order)}
    sets = tuple(
        frozenset(u for u in g.neighbors(v) if pos[u] > pos[v]) for v in order
    )
    return OrderedHost(g, order, sets)


def basin(host: OrderedHost, p: int, i: int) -> frozenset[int]:
    """The p-basin at position i, in original host labels."""
    if not 1 <= i <= host.graph.n:
        raise ValueError(f"position {i} out of range")
    tail = set(host.order[i - 1 :]) - host.deletion_sets[i - 1]
    sub, vmap = host.graph.induced_subgraph(tail)
    pivot = vmap.index(host.vertex_at(i))
    return frozenset(vmap[v] for v in ball(sub, pivot, p))


def extract_collection(
    h: Graph, host: OrderedHost, phi: Sequence[int], _protected_tail: int = 0
) -> tuple[IndependentCollection, tuple[int, ...]]:
    """Run the peeling iteration for one homomorphism.

    Returns the extracted independent collection of separations of ``h`` plus
    the parallel tuple of admitted host positions (one per member).  Ties are
    resolved exactly as in the underlying argument: positions are processed in
    ascending order and peeled components in canonical vertex order.
    ``_protected_tail`` blocks admissions in the last so many positions; the
    public contract is the zero default.
    """
    g = host.graph
    phi = tuple(phi)
    if len(phi) != h.n or any(not 0 <= x < g.n for x in phi):
        raise ValueError("phi must map every pattern vertex to a host vertex")
    for u, v in h.edges():
        if not g.has_edge(phi[u], phi[v]):
            raise ValueError("phi is not a homomorphism")

    remaining = set(range(h.n))
    prior_deletions: set[int] = set()  # union of S_j over earlier pivot positions
    members: list[Separation] = []
    iota: list[int] = []
    all_vertices = frozenset(range(h.n))
    last_admissible = g.n - _protected_tail

    for i in range(1, g.n + 1):
        v_i = host.vertex_at(i)
        if v_i not in {phi[u] for u in remaining}:
            continue
        s_i = host.deletion_sets[i - 1]
        kept = [u for u in remaining if phi[u] not in s_i]
        sub, vmap = h.induced_subgraph(kept)
        peeled: set[int] = set()
        for comp in components(sub):
            comp_vs = {vmap[c] for c in comp}
            if any(phi[u] == v_i for u in comp_vs):
                peeled |= comp_vs
        remaining -= peeled
        images = {phi[u] for u in peeled}
        if i <= last_admissible and not (prior_deletions & images):
            flap = frozenset(peeled)
            members.append(
                Separation(
                    frozenset().union(*({u} | h.neighbors(u) for u in flap)),
                    all_vertices - flap,
                )
            )
            iota.append(i)
        prior_deletions |= s_i

    return IndependentCollection(h, tuple(members)), tuple(iota)


def container_bound_check(
    h: Graph,
    host: OrderedHost,
    p: int,
    homs: Sequence[Sequence[int]],
    basin_bound: int | None = None,
    deletion_bound: int | None = None,
    _protected_tail: int = 0,
) -> dict:
    """Check the container bound |Phi| <= c * b^h * n^t against a set of maps.

    t is the largest extracted collection over the supplied homomorphisms and
    c = (h(k+h)^(2h-1) + N)^h with k bounding the deletion sets and N the
    (internally fixed to zero) protected tail.  The constant is an upper-bound
    assertion only, never an estimate of actual counts.
    """
    n = host.graph.n
    b_actual = max((len(basin(host, p, i)) for i in range(1, n + 1)), default=0)
    if basin_bound is not None and b_actual > basin_bound:
        raise ValueError(f"basin bound {basin_bound} violated: saw a basin of size {b_actual}")
    b = basin_bound if basin_bound is not None else b_actual
    k_actual = host.max_deletion_size()
    k = deletion_bound if deletion_bound is not None else k_actual

    t = 0
    witness: tuple[int, ...] | None = None
    for phi in homs:
        coll, _ = extract_collection(h, host, phi, _protected_tail)
        if witness is None or coll.size > t:
            t = coll.size
            witness = tuple(phi)
    hn = h.n
    c1 = hn * (k + hn) ** (2 * hn - 1) + _protected_tail
    c = c1**hn
    bound = c * b**hn * max(1, n) ** t
    return {
        "hom_count": len(homs),
        "t": t,
        "p": p,
        "b": b,
        "k": k,
        "c": c,
        "bound": bound,
        "holds": len(homs) <= bound,
        "witness_phi": list(witness) if witness is not None else None,
    }
