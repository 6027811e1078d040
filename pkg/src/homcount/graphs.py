"""Simple undirected graphs and the elementary quantities everything else consumes.

Vertices are always 0..n-1.  Adjacency is kept as one Python-int bitmask per
vertex, so neighborhood queries and vertex-set intersections are single big-int
operations; that is the representation all the exhaustive searches in this
package rely on (they are sized for n up to roughly 64).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph: no loops, no parallel edges, symmetric adjacency."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    # -- basic queries ---------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in _bits(self._adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def edge_count(self) -> int:
        return sum(self._adj[v].bit_count() for v in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self._adj), reverse=True))

    # -- derived graphs --------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced_subgraph(self, vs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vs`` plus the new->old vertex map (sorted order)."""
        keep = sorted(set(vs))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos
        ]
        return Graph(len(keep), edges), tuple(keep)

    def with_edges_added(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges()) + [e for e in extra])

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges())!r})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges()))


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    return Graph(n, edges)


# -- small named graphs ---------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(
        g.n + h.n,
        list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()],
    )


# -- neighborhoods, components, radius ------------------------------------


def ball(g: Graph, x: int, radius_cap: int) -> frozenset[int]:
    """Vertices within distance ``radius_cap`` of x; {x} at 0, empty below 0."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    if radius_cap < 0:
        return frozenset()
    cur = 1 << x
    for _ in range(radius_cap):
        grown = cur
        for v in _bits(cur):
            grown |= g.adjacency_mask(v)
        if grown == cur:
            break
        cur = grown
    return frozenset(_bits(cur))


def boundary(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """External neighborhood N_G(S)."""
    smask = _mask_of(s)
    if smask >> g.n:
        raise ValueError("vertex set contains out-of-range vertices")
    out = 0
    for v in _bits(smask):
        out |= g.adjacency_mask(v)
    return frozenset(_bits(out & ~smask))


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    sset = frozenset(s)
    return boundary(g, sset) | sset


def components(g: Graph) -> tuple[frozenset[int], ...]:
    """Vertex sets of connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        while True:
            grown = comp
            for u in _bits(comp):
                grown |= g.adjacency_mask(u)
            if grown == comp:
                break
            comp = grown
        seen |= comp
        out.append(frozenset(_bits(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def radius(g: Graph) -> int:
    """Minimum eccentricity; only defined for connected graphs."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("radius requires a nonempty connected graph")
    best = g.n
    for v in range(g.n):
        cur = 1 << v
        ecc = 0
        while cur.bit_count() < g.n:
            grown = cur
            for u in _bits(cur):
                grown |= g.adjacency_mask(u)
            cur = grown
            ecc += 1
        best = min(best, ecc)
    return best


# -- independence numbers --------------------------------------------------


def _max_independent_mask(g: Graph, candidates: int) -> int:
    """Maximum independent set (as a mask) within the candidate mask, exact."""
    best_mask = 0

    def rec(cand: int, chosen: int, size: int) -> None:
        nonlocal best_mask
        if size + cand.bit_count() <= best_mask.bit_count():
            return
        if cand == 0:
            if size > best_mask.bit_count():
                best_mask = chosen
            return
        # branch on a max-degree candidate: densest first shrinks the tree
        v = max(_bits(cand), key=lambda u: (g.adjacency_mask(u) & cand).bit_count())
        bit = 1 << v
        rec(cand & ~(bit | g.adjacency_mask(v)), chosen | bit, size + 1)
        rec(cand & ~bit, chosen, size)

    rec(candidates, 0, 0)
    return best_mask


def independence_number(g: Graph) -> int:
    return _max_independent_mask(g, (1 << g.n) - 1).bit_count()


def max_low_degree_independent_set(g: Graph, d: int) -> frozenset[int]:
    """A maximum independent set among vertices of degree at most d in g."""
    cand = _mask_of(v for v in range(g.n) if g.degree(v) <= d)
    return frozenset(_bits(_max_independent_mask(g, cand)))


def low_degree_independence_number(g: Graph, d: int) -> int:
    """Maximum number of pairwise non-adjacent vertices of degree at most d."""
    return len(max_low_degree_independent_set(g, d))


# -- degeneracy -------------------------------------------------------------


def degeneracy(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Degeneracy d and a removal ordering with <= d later neighbors per vertex.

    The ordering repeatedly deletes a minimum-degree vertex (smallest index on
    ties, for determinism).
    """
    remaining = (1 << g.n) - 1
    order = []
    d = 0
    while remaining:
        v = min(
            _bits(remaining),
            key=lambda u: ((g.adjacency_mask(u) & remaining).bit_count(), u),
        )
        d = max(d, (g.adjacency_mask(v) & remaining).bit_count())
        order.append(v)
        remaining &= ~(1 << v)
    return d, tuple(order)


# -- blocks -----------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """A block (maximal 2-connected subgraph, bridge, or isolated vertex)."""

    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    cut_vertices: frozenset[int]

    @property
    def is_end_block(self) -> bool:
        return len(self.cut_vertices) <= 1


def cut_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for b in blocks(g) for v in b.cut_vertices)


def blocks(g: Graph) -> tuple[Block, ...]:
    """Biconnected components via Hopcroft-Tarjan; isolated vertices get singleton blocks."""
    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()

    for root in range(g.n):
        if disc[root]:
            continue
        # iterative DFS; frame = (vertex, parent, neighbor iterator)
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(_bits(g.adjacency_mask(root)))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(_bits(g.adjacency_mask(w))))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                # u separates the block hanging below v
                blk = []
                while edge_stack:
                    e = edge_stack.pop()
                    blk.append(e)
                    if e == (u, v):
                        break
                if blk:
                    raw_blocks.append(blk)
                if u != root or root_children > 1:
                    cuts.add(u)
        if root_children > 1:
            cuts.add(root)

    out = []
    covered = set()
    for blk in raw_blocks:
        vs = frozenset(v for e in blk for v in e)
        covered |= vs
        es = tuple(sorted((min(e), max(e)) for e in blk))
        out.append(Block(vs, es, frozenset(vs & cuts)))
    for v in range(g.n):
        if v not in covered:
            out.append(Block(frozenset({v}), (), frozenset()))
    out.sort(key=lambda b: sorted(b.vertices))
    return tuple(out)


def end_block_count(g: Graph) -> int:
    """Number of blocks containing at most one cut-vertex."""
    return sum(1 for b in blocks(g) if b.is_end_block)


# -- canonical labeling and isomorphism -------------------------------------


def _refined_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex coloring by iterated neighbor-color counting.

    Color ids are assigned by sorting label-independent signatures, so equal
    graphs get equal color multisets regardless of vertex numbering.
    """
    n = g.n
    sig: list = [g.degree(v) for v in range(n)]
    ranks = sorted(set(sig))
    colors = [ranks.index(s) for s in sig]
    ncls = len(ranks)
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adjacency_mask(v)))))
            for v in range(n)
        ]
        uniq = sorted(set(sig))
        if len(uniq) == ncls:
            return tuple(colors)
        index = {s: i for i, s in enumerate(uniq)}
        colors = [index[s] for s in sig]
        ncls = len(uniq)


def _canonical_perm(g: Graph) -> tuple[int, ...]:
    """A canonical ordering: positions -> vertices, label-independent.

    Restricted to orderings whose color sequence is the sorted color list, the
    adjacency-column string is maximized by prefix-pruned DFS; only tie
    branches (partial automorphisms) are explored.
    """
    n = g.n
    if n == 0:
        return ()
    colors = _refined_colors(g)
    target = sorted(colors)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)

    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    adj = g._adj

    def dfs(placed: list[int], used: int, cols: list[int]) -> None:
        nonlocal best_cols, best_perm
        pos = len(placed)
        if best_cols is not None and cols < best_cols[:pos]:
            return
        if pos == n:
            if best_cols is None or cols > best_cols:
                best_cols = list(cols)
                best_perm = list(placed)
            return
        col_of = {}
        for v in cells[target[pos]]:
            if used >> v & 1:
                continue
            c = 0
            for u in placed:
                c = (c << 1) | (adj[v] >> u & 1)
            col_of[v] = c
        if not col_of:
            return
        m = max(col_of.values())
        cols.append(m)
        for v in sorted(v for v, c in col_of.items() if c == m):
            placed.append(v)
            dfs(placed, used | (1 << v), cols)
            placed.pop()
        cols.pop()

    dfs([], 0, [])
    assert best_perm is not None
    return tuple(best_perm)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 encoding: equal strings exactly for isomorphic graphs."""
    order = _canonical_perm(g)
    pos = {v: i for i, v in enumerate(order)}
    return to_graph6(g.relabel([pos[v] for v in range(g.n)]))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if sorted(_refined_colors(g1)) != sorted(_refined_colors(g2)):
        return False
    return canonical_form(g1) == canonical_form(g2)


# -- graph6 and edge-list formats -------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 output supported up to 258047 vertices")
    bits = []
    for j in range(1, n):
        col = g.adjacency_mask(j)
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 input supported up to 258047 vertices")
        if len(s) < 4:
            raise ValueError("truncated graph6 vertex count")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 0:
        raise ValueError("bad graph6 vertex count")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError("graph6 body length does not match vertex count")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend(val >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[need:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
