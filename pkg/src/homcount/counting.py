"""Exact brute-force counting of homomorphisms, embeddings, and automorphisms.

These are the ground-truth oracles: they never approximate, and they raise
:class:`BudgetExceededError` instead of truncating when a search is too large.
The backtracking places pattern vertices so that each new vertex has an
already-placed neighbor whenever possible, which lets candidate sets be
restricted to a neighborhood intersection.
"""

from __future__ import annotations

import enum

from .errors import BudgetExceededError
from .graphs import Graph, _bits

DEFAULT_BUDGET = 10**9


class CountMode(enum.Enum):
    HOMOMORPHISM = "homomorphism"
    SUBGRAPH = "subgraph"
    INDUCED = "induced"


def _search_order(h: Graph) -> list[int]:
    """Pattern vertex order keeping each vertex adjacent to a placed one when possible."""
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        best = None
        for v in range(h.n):
            if placed >> v & 1:
                continue
            key = ((h.adjacency_mask(v) & placed).bit_count(), h.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        order.append(v)
        placed |= 1 << v
    return order


def _count_maps(
    h: Graph,
    g: Graph,
    *,
    injective: bool,
    induced: bool,
    budget: int | None,
    cap: int | None = None,
) -> int:
    """Count maps V(h)->V(g) preserving adjacency (and non-adjacency if induced)."""
    if h.n == 0:
        return 1
    if g.n == 0 or (injective and h.n > g.n):
        return 0
    order = _search_order(h)
    pos_of = {v: i for i, v in enumerate(order)}
    earlier_nbrs: list[list[int]] = []
    earlier_non: list[list[int]] = []
    for i, v in enumerate(order):
        nbrs = [pos_of[u] for u in _bits(h.adjacency_mask(v)) if pos_of[u] < i]
        earlier_nbrs.append(nbrs)
        if induced:
            earlier_non.append([j for j in range(i) if j not in nbrs])
        else:
            earlier_non.append([])

    full = (1 << g.n) - 1
    gadj = [g.adjacency_mask(v) for v in range(g.n)]
    remaining = budget if budget is not None else DEFAULT_BUDGET
    images = [0] * h.n
    total = 0

    def rec(i: int, used: int) -> None:
        nonlocal total, remaining
        cand = full
        for j in earlier_nbrs[i]:
            cand &= gadj[images[j]]
        for j in earlier_non[i]:
            cand &= ~gadj[images[j]]
        if injective:
            cand &= ~used
        remaining -= cand.bit_count()
        if remaining < 0:
            raise BudgetExceededError("counting budget exhausted")
        if i == h.n - 1:
            total += cand.bit_count()
            if cap is not None and total >= cap:
                total = cap
                raise _CapReached
            return
        for v in _bits(cand):
            images[i] = v
            rec(i + 1, used | (1 << v))

    try:
        rec(0, 0)
    except _CapReached:
        pass
    return total


class _CapReached(Exception):
    pass


def count_homomorphisms(h: Graph, g: Graph, budget: int | None = None) -> int:
    """Number of adjacency-preserving maps V(h) -> V(g)."""
    return _count_maps(h, g, injective=False, induced=False, budget=budget)


def count_injective(h: Graph, g: Graph, budget: int | None = None) -> int:
    """Number of injective adjacency-preserving maps (subgraph embeddings)."""
    return _count_maps(h, g, injective=True, induced=False, budget=budget)


def automorphism_count(h: Graph) -> int:
    """Order of the automorphism group, by pruned permutation search."""
    return _count_maps(h, h, injective=True, induced=True, budget=None)


def count_subgraph_copies(h: Graph, g: Graph, budget: int | None = None) -> int:
    """Number of subgraphs of g isomorphic to h (embeddings / |Aut(h)|)."""
    inj = count_injective(h, g, budget=budget)
    aut = automorphism_count(h)
    assert inj % aut == 0, "embedding count must be divisible by the automorphism count"
    return inj // aut


def count_induced_copies(h: Graph, g: Graph, budget: int | None = None) -> int:
    """Number of induced subgraphs of g isomorphic to h."""
    emb = _count_maps(h, g, injective=True, induced=True, budget=budget)
    aut = automorphism_count(h)
    assert emb % aut == 0, "embedding count must be divisible by the automorphism count"
    return emb // aut


def has_subgraph_copy(h: Graph, g: Graph, budget: int | None = None) -> bool:
    return _count_maps(h, g, injective=True, induced=False, budget=budget, cap=1) > 0


def has_induced_copy(h: Graph, g: Graph, budget: int | None = None) -> bool:
    return _count_maps(h, g, injective=True, induced=True, budget=budget, cap=1) > 0


def count(h: Graph, g: Graph, mode: CountMode, budget: int | None = None) -> int:
    if mode is CountMode.HOMOMORPHISM:
        return count_homomorphisms(h, g, budget=budget)
    if mode is CountMode.SUBGRAPH:
        return count_subgraph_copies(h, g, budget=budget)
    if mode is CountMode.INDUCED:
        return count_induced_copies(h, g, budget=budget)
    raise ValueError(f"unknown count mode: {mode!r}")
