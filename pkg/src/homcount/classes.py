"""The catalog of sparse graph classes with exact membership predicates.

Every catalog entry bundles an exact membership test, the separation-order cap
its exponent formula prescribes, and a tag selecting how duplicability of a
collection is decided (torso test, wedge threshold, closed formula, or the
generic wedge scan).  Planarity is delegated to networkx's linear-time test;
the minor-based predicates used to cross-validate it are implemented here from
scratch, so the two routes stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import networkx as nx

from .counting import has_induced_copy, has_subgraph_copy
from .errors import BudgetExceededError, SizeBudgetExceededError
from .graphs import (
    Graph,
    _bits,
    _mask_of,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degeneracy,
    path_graph,
)

SUBSET_DP_CAP = 15  # exact treewidth/pathwidth beyond this raises
MINOR_SEARCH_BUDGET = 5 * 10**6

TORSO_TEST = "torso_test"
WEDGE_THRESHOLD = "wedge_threshold"
CLOSED_FORMULA = "closed_formula"
GENERIC_SCAN = "generic_scan"


# -- low-level predicates ----------------------------------------------------


def _to_networkx(g: Graph) -> "nx.Graph":
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    return ng


def is_planar(g: Graph) -> bool:
    ok, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return ok


def is_outerplanar(g: Graph) -> bool:
    """Planarity of g plus a universal apex vertex."""
    apex = g.n
    ng = _to_networkx(g)
    ng.add_node(apex)
    ng.add_edges_from((apex, v) for v in range(g.n))
    ok, _ = nx.check_planarity(ng, counterexample=False)
    return ok


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_caterpillar_forest(g: Graph) -> bool:
    """Pathwidth at most 1, exactly: a forest whose non-leaf vertices induce paths.

    In a tree the non-leaf vertices induce a subtree, so it suffices that no
    vertex has three or more non-leaf neighbors.
    """
    if not is_forest(g):
        return False
    spine = [v for v in range(g.n) if g.degree(v) >= 2]
    spine_mask = _mask_of(spine)
    return all((g.adjacency_mask(v) & spine_mask).bit_count() <= 2 for v in spine)


def treewidth(g: Graph, cap: int = SUBSET_DP_CAP) -> int:
    """Exact treewidth, component by component, by elimination-ordering DP."""
    best = 0
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp)
        best = max(best, _treewidth_connected(sub, cap))
    return best


def _treewidth_connected(g: Graph, cap: int) -> int:
    n = g.n
    if n > cap:
        raise SizeBudgetExceededError(
            f"exact treewidth supports at most {cap} vertices per component, got {n}"
        )
    if n <= 1:
        return 0
    if g.edge_count == n - 1:
        return 1  # connected with n-1 edges: a tree
    adj = [g.adjacency_mask(v) for v in range(n)]
    full = (1 << n) - 1

    def fill_degree(eliminated: int, v: int) -> int:
        # neighbors of v in the graph where `eliminated` has been contracted away
        reach = 1 << v
        frontier = adj[v]
        seen = reach | frontier
        out = frontier & ~eliminated
        frontier &= eliminated
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            seen |= nxt
            out |= nxt & ~eliminated
            frontier = nxt & eliminated
        return (out & ~(1 << v)).bit_count()

    width = [0] * (full + 1)
    width[0] = -1
    for s in range(1, full + 1):
        best = n
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cand = max(width[s ^ low], fill_degree(s ^ low, v))
            if cand < best:
                best = cand
        width[s] = best
    return width[full]


def pathwidth(g: Graph, cap: int = SUBSET_DP_CAP) -> int:
    """Exact pathwidth (= vertex separation number), component by component."""
    best = 0
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp)
        best = max(best, _pathwidth_connected(sub, cap))
    return best


def _pathwidth_connected(g: Graph, cap: int) -> int:
    n = g.n
    if n > cap:
        raise SizeBudgetExceededError(
            f"exact pathwidth supports at most {cap} vertices per component, got {n}"
        )
    if n <= 1:
        return 0
    adj = [g.adjacency_mask(v) for v in range(n)]
    full = (1 << n) - 1
    cost = [0] * (full + 1)
    for s in range(1, full + 1):
        # vertices of s with a neighbor outside s
        b = 0
        for v in _bits(s):
            if adj[v] & ~s:
                b += 1
        best = n
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            prev = cost[s ^ low]
            if prev < best:
                best = prev
        cost[s] = max(b, best)
    return cost[full]


# -- minors, subdivisions, shallow models ------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left: int):
        self.left = left

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("minor-search budget exhausted")


def _connected_subsets_within(
    g: Graph, allowed: int, max_size: int, budget: _Budget
) -> Iterator[int]:
    def grow(s: int, forbidden: int) -> Iterator[int]:
        budget.spend()
        yield s
        if s.bit_count() >= max_size:
            return
        frontier = 0
        for v in _bits(s):
            frontier |= g.adjacency_mask(v)
        frontier &= allowed & ~s & ~forbidden
        for u in _bits(frontier):
            yield from grow(s | (1 << u), forbidden)
            forbidden |= 1 << u

    seen = 0
    for seed in _bits(allowed):
        yield from grow(1 << seed, seen)
        seen |= 1 << seed


def find_minor_model(
    g: Graph, m: Graph, budget: int | None = None
) -> Optional[tuple[frozenset[int], ...]]:
    """Disjoint connected branch sets, one per vertex of m, linked per the edges of m."""
    if m.n == 0:
        return ()
    if m.n > g.n or m.edge_count > g.edge_count:
        return None
    bud = _Budget(budget if budget is not None else MINOR_SEARCH_BUDGET)
    order = sorted(range(m.n), key=lambda v: (-m.degree(v), v))
    placed_masks: list[int] = []
    placed_nbrs: list[int] = []

    def neighborhood(mask: int) -> int:
        nb = 0
        for v in _bits(mask):
            nb |= g.adjacency_mask(v)
        return nb

    def rec(idx: int, used: int) -> Optional[list[int]]:
        if idx == len(order):
            return []
        allowed = ((1 << g.n) - 1) & ~used
        room = g.n - used.bit_count() - (len(order) - idx - 1)
        if room < 1:
            return None
        needed = [
            j for j in range(idx) if m.has_edge(order[idx], order[j])
        ]
        for s in _connected_subsets_within(g, allowed, room, bud):
            if any(not (placed_nbrs[j] & s) for j in needed):
                continue
            placed_masks.append(s)
            placed_nbrs.append(neighborhood(s))
            tail = rec(idx + 1, used | s)
            placed_masks.pop()
            placed_nbrs.pop()
            if tail is not None:
                return [s] + tail
        return None

    sets = rec(0, 0)
    if sets is None:
        return None
    by_vertex = [0] * m.n
    for pos, v in enumerate(order):
        by_vertex[v] = sets[pos]
    return tuple(frozenset(_bits(s)) for s in by_vertex)


def has_minor(g: Graph, m: Graph, budget: int | None = None) -> bool:
    return find_minor_model(g, m, budget=budget) is not None


def has_subdivision(
    g: Graph,
    m: Graph,
    allowed_lengths: Optional[frozenset[int]] = None,
    budget: int | None = None,
) -> bool:
    """Does some subgraph of g subdivide m, each edge subdivided a number of
    times drawn from allowed_lengths (None = any number)?"""
    if m.n > g.n:
        return False
    bud = _Budget(budget if budget is not None else MINOR_SEARCH_BUDGET)
    if allowed_lengths is not None:
        allowed_lengths = frozenset(allowed_lengths)
        if not allowed_lengths:
            return m.edge_count == 0 and m.n <= g.n
        max_inner = max(allowed_lengths)
    else:
        max_inner = g.n
    # place branch vertices one at a time; route all edges to earlier branch
    # vertices before placing the next, so dead placements die early
    order = sorted(range(m.n), key=lambda v: (-m.degree(v), v))
    branch_img: dict[int, int] = {}

    def route(pairs: list[tuple[int, int]], used: int) -> bool:
        if not pairs:
            return place(len(branch_img), used)
        (a, b), rest = pairs[0], pairs[1:]

        target = branch_img[b]

        def paths(v: int, inner: int, taken: int) -> bool:
            bud.spend()
            if g.has_edge(v, target) and (
                allowed_lengths is None or inner in allowed_lengths
            ):
                if route(rest, used | taken):
                    return True
            if inner >= max_inner:
                return False
            cand = g.adjacency_mask(v) & ~taken & ~used
            for u in _bits(cand):
                if paths(u, inner + 1, taken | (1 << u)):
                    return True
            return False

        return paths(branch_img[a], 0, 0)

    def place(idx: int, used: int) -> bool:
        if idx == m.n:
            return True
        v = order[idx]
        pairs = [(v, u) for u in order[:idx] if m.has_edge(v, u)]
        for img in range(g.n):
            if used >> img & 1:
                continue
            if g.degree(img) < m.degree(v):
                continue
            bud.spend()
            branch_img[v] = img
            if route(pairs, used | (1 << img)):
                return True
            del branch_img[v]
        return False

    return place(0, 0)


def has_shallow_kst_model(
    g: Graph, s: int, t: int, p: int, q: int, budget: int | None = None
) -> bool:
    """A (p,q)-model of a K_{s,t}-minor: s branch sets of <= p vertices and t of
    <= q vertices, all disjoint and connected, with complete bipartite linkage."""
    if s < 1 or t < 1:
        raise ValueError("both sides of the model must be nonempty")
    bud = _Budget(budget if budget is not None else MINOR_SEARCH_BUDGET)

    def neighborhood(mask: int) -> int:
        nb = 0
        for v in _bits(mask):
            nb |= g.adjacency_mask(v)
        return nb

    full = (1 << g.n) - 1

    def rec(side_a: list[int], side_b: list[int], used: int) -> bool:
        if len(side_a) == s and len(side_b) == t:
            return True
        # fill side A first, then side B; force increasing minima within a side
        # to kill the permutation symmetry between interchangeable sets
        filling_a = len(side_a) < s
        cap = p if filling_a else q
        prev = (side_a if filling_a else side_b)
        minfloor = min(_bits(prev[-1])) + 1 if prev else 0
        allowed = full & ~used & ~((1 << minfloor) - 1)
        others = side_b if filling_a else side_a
        for cand in _connected_subsets_within(g, allowed, cap, bud):
            if any(not (neighborhood(cand) & o) for o in others):
                continue
            prev.append(cand)
            if rec(side_a, side_b, used | cand):
                return True
            prev.pop()
        return False

    # the two sides are not interchangeable unless (s,p)==(t,q); recursion
    # above keeps A-sets and B-sets in increasing min-vertex order, which is
    # lossless since sets within a side are unordered
    return rec([], [], 0)


# -- the catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphClass:
    """A catalog entry: membership predicate + order bound + duplicability rule."""

    kind: str
    spec: str
    d: int = 0
    t: int = 0
    s: int = 0
    forbidden_minor: Optional[Graph] = None
    base: Optional["GraphClass"] = None
    forbidden: tuple[Graph, ...] = ()
    induced_mode: bool = False
    order_cap: Optional[int] = None  # generic minor-free classes only (heuristic)

    def contains(self, g: Graph, budget: int | None = None) -> bool:
        return membership(self, g, budget=budget)

    @property
    def dup_rule(self) -> str:
        if self.kind == "degenerate":
            return CLOSED_FORMULA
        if self.kind == "pathwidth":
            return WEDGE_THRESHOLD
        if self.kind in ("forests", "outerplanar", "planar", "treewidth", "kst-minor-free"):
            return TORSO_TEST
        if self.kind == "minor-free":
            m = self.forbidden_minor
            if m is not None and m.edge_count == m.n * (m.n - 1) // 2:
                return TORSO_TEST
            return GENERIC_SCAN
        return GENERIC_SCAN

    @property
    def heuristic_order_bound(self) -> bool:
        return self.kind == "minor-free" and self.dup_rule == GENERIC_SCAN

    @property
    def is_monotone(self) -> bool:
        if self.kind == "subgraph-restricted":
            return not self.induced_mode and self.base.is_monotone
        return True

    def wedge_threshold(self) -> int:
        if self.kind != "pathwidth":
            raise ValueError("wedge threshold only applies to bounded pathwidth")
        t = self.t
        return t * (t - 1) // 2 + 2 * t + 3

    def __str__(self) -> str:
        return self.spec


def degenerate_class(d: int) -> GraphClass:
    return GraphClass("degenerate", f"degenerate:{d}", d=d)


def forests_class() -> GraphClass:
    return GraphClass("forests", "forests")


def outerplanar_class() -> GraphClass:
    return GraphClass("outerplanar", "outerplanar")


def planar_class() -> GraphClass:
    return GraphClass("planar", "planar")


def treewidth_class(t: int) -> GraphClass:
    return GraphClass("treewidth", f"treewidth:{t}", t=t)


def pathwidth_class(t: int) -> GraphClass:
    return GraphClass("pathwidth", f"pathwidth:{t}", t=t)


def minor_free_class(m: Graph, name: str = "", order_cap: int | None = None) -> GraphClass:
    spec = f"minor-free:{name}" if name else "minor-free:<graph>"
    return GraphClass("minor-free", spec, forbidden_minor=m, order_cap=order_cap)


def kst_minor_free_class(s: int, t: int) -> GraphClass:
    if not 1 <= s <= t:
        raise ValueError("K_{s,t}-minor-free classes need 1 <= s <= t")
    return GraphClass("kst-minor-free", f"kst-minor-free:{s},{t}", s=s, t=t)


def subgraph_restricted_class(
    base: GraphClass, forbidden, induced: bool = False, spec: str = ""
) -> GraphClass:
    forb = tuple(forbidden)
    return GraphClass(
        "subgraph-restricted",
        spec or f"{base.spec}+forbid",
        base=base,
        forbidden=forb,
        induced_mode=induced,
    )


def membership(cls: GraphClass, g: Graph, budget: int | None = None) -> bool:
    kind = cls.kind
    if kind == "degenerate":
        return degeneracy(g)[0] <= cls.d
    if kind == "forests":
        return is_forest(g)
    if kind == "outerplanar":
        return is_outerplanar(g)
    if kind == "planar":
        return is_planar(g)
    if kind == "treewidth":
        if cls.t == 1:
            return is_forest(g)  # exact characterization, any size
        if g.n <= cls.t + 1:
            return True  # width is at most n-1
        if g.edge_count > cls.t * g.n - cls.t * (cls.t + 1) // 2:
            return False  # width-t graphs cannot be this dense
        return treewidth(g) <= cls.t
    if kind == "pathwidth":
        if cls.t == 1:
            return is_caterpillar_forest(g)  # exact characterization, any size
        if g.n <= cls.t + 1:
            return True
        if g.edge_count > cls.t * g.n - cls.t * (cls.t + 1) // 2:
            return False
        return pathwidth(g) <= cls.t
    if kind == "minor-free":
        return not has_minor(g, cls.forbidden_minor, budget=budget)
    if kind == "kst-minor-free":
        return not has_minor(g, complete_bipartite_graph(cls.s, cls.t), budget=budget)
    if kind == "subgraph-restricted":
        if not membership(cls.base, g, budget=budget):
            return False
        check = has_induced_copy if cls.induced_mode else has_subgraph_copy
        return all(not check(f, g, budget=budget) for f in cls.forbidden)
    raise ValueError(f"unknown class kind {kind!r}")


def class_order_bound(cls: GraphClass) -> int:
    """The class-specific cap on separation orders for the exponent search."""
    kind = cls.kind
    if kind == "degenerate":
        return cls.d
    if kind in ("forests", "outerplanar"):
        return 1
    if kind == "planar":
        return 2
    if kind in ("treewidth", "pathwidth"):
        return cls.t
    if kind == "kst-minor-free":
        return cls.s - 1
    if kind == "minor-free":
        m = cls.forbidden_minor
        if m.edge_count == m.n * (m.n - 1) // 2:
            return m.n - 2
        if cls.order_cap is not None:
            return cls.order_cap
        return max(1, m.n - 2)  # heuristic cap; flagged in reports
    if kind == "subgraph-restricted":
        return class_order_bound(cls.base)
    raise ValueError(f"unknown class kind {kind!r}")


# -- CLI spec strings ----------------------------------------------------------


@lru_cache(maxsize=None)
def _named_graph(name: str) -> Graph:
    name = name.strip()
    if name.startswith("K") and "," in name:
        s, t = name[1:].split(",")
        return complete_bipartite_graph(int(s), int(t))
    if name.startswith("K"):
        return complete_graph(int(name[1:]))
    if name.startswith("C"):
        return cycle_graph(int(name[1:]))
    if name.startswith("P"):
        return path_graph(int(name[1:]))
    raise ValueError(f"unknown graph name {name!r} (use K5, K3,3, C6, or P4 style)")


def parse_class_spec(spec: str) -> GraphClass:
    """Parse catalog entries named like ``degenerate:2``, ``minor-free:K5``, or
    ``planar+forbid-cycles:4-8``."""
    spec = spec.strip()
    base_part, _, rest = spec.partition("+")
    cls = _parse_base(base_part)
    if not rest:
        return cls
    for clause in rest.split("+"):
        cls = _apply_restriction(cls, clause, spec)
    return cls


def _parse_base(part: str) -> GraphClass:
    name, _, arg = part.partition(":")
    name = name.strip()
    if name == "degenerate":
        return degenerate_class(int(arg))
    if name == "forests":
        return forests_class()
    if name == "outerplanar":
        return outerplanar_class()
    if name == "planar":
        return planar_class()
    if name == "treewidth":
        return treewidth_class(int(arg))
    if name == "pathwidth":
        return pathwidth_class(int(arg))
    if name == "minor-free":
        return minor_free_class(_named_graph(arg), name=arg)
    if name == "kst-minor-free":
        s, t = arg.split(",")
        return kst_minor_free_class(int(s), int(t))
    raise ValueError(f"unknown class spec {part!r}")


def _cycle_range(arg: str) -> tuple[int, int]:
    lo, _, hi = arg.partition("-")
    lo_i, hi_i = int(lo), int(hi or lo)
    if lo_i < 3 or hi_i < lo_i:
        raise ValueError(f"bad cycle length range {arg!r}")
    return lo_i, hi_i


def _apply_restriction(cls: GraphClass, clause: str, full_spec: str) -> GraphClass:
    name, _, arg = clause.partition(":")
    name = name.strip()
    if name == "forbid-cycles":
        lo, hi = _cycle_range(arg)
        forb = tuple(cycle_graph(k) for k in range(lo, hi + 1))
    elif name == "forbid-even-cycles":
        lo, hi = _cycle_range(arg)
        forb = tuple(cycle_graph(k) for k in range(lo, hi + 1) if k % 2 == 0)
    elif name == "forbid":
        forb = tuple(_named_graph(n) for n in arg.split(";"))
    elif name == "forbid-induced":
        forb = tuple(_named_graph(n) for n in arg.split(";"))
        return subgraph_restricted_class(cls, forb, induced=True, spec=full_spec)
    else:
        raise ValueError(f"unknown restriction clause {clause!r}")
    return subgraph_restricted_class(cls, forb, induced=False, spec=full_spec)
