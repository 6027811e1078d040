"""Predicted growth exponents: the size of a maximum duplicable collection.

For a pattern in a catalog class the growth exponent of the maximum count is
the size of a largest independent collection of separations that stays in the
class under unbounded duplication.  Depending on the class this is decided by
a torso test, a single wedge threshold, a closed formula, or a bounded wedge
scan whose positive answers are honestly labeled empirical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classes import (
    CLOSED_FORMULA,
    GENERIC_SCAN,
    TORSO_TEST,
    WEDGE_THRESHOLD,
    GraphClass,
    class_order_bound,
    is_outerplanar,
    membership,
)
from .errors import PatternNotInClassError, SizeBudgetExceededError
from .graphs import (
    Graph,
    blocks,
    canonical_form,
    degeneracy,
    max_low_degree_independent_set,
)
from .separations import (
    IndependentCollection,
    central_torso,
    collection_from_flaps,
    enumerate_essential_collections,
    is_essential,
    essentialize,
    peripheral_torsos,
    validate,
)
from .duplication import wedge_collection

DUPLICABLE_PROVEN = "duplicable_proven"
NOT_DUPLICABLE = "not_duplicable"
DUPLICABLE_EMPIRICAL = "duplicable_empirical"


def default_k_max(h: Graph) -> int:
    """Scan depth for the generic rule; a finite sound threshold exists but is unknown."""
    return 2 * h.n + 4


@dataclass(frozen=True)
class DuplicabilityVerdict:
    status: str
    failing_k: Optional[int] = None  # smallest failing k when known
    tested_up_to_k: Optional[int] = None
    evidence: Optional[dict] = None

    @property
    def is_duplicable(self) -> bool:
        return self.status != NOT_DUPLICABLE

    @property
    def is_proven(self) -> bool:
        return self.status == DUPLICABLE_PROVEN

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.failing_k is not None:
            out["failing_k"] = self.failing_k
        if self.tested_up_to_k is not None:
            out["tested_up_to_k"] = self.tested_up_to_k
        if self.evidence is not None:
            out["evidence"] = self.evidence
        return out


@dataclass(frozen=True)
class ExponentReport:
    exponent: int
    mode: str
    method: str
    class_spec: str
    witness: Optional[IndependentCollection]
    verdicts: tuple[tuple[tuple[tuple[int, ...], ...], DuplicabilityVerdict], ...] = ()
    identically_zero: bool = False
    proven: bool = True
    image: Optional[Graph] = None  # homomorphic image carrying the witness, hom mode only

    def to_json(self) -> dict:
        out: dict = {
            "exponent": self.exponent,
            "mode": self.mode,
            "method": self.method,
            "class": self.class_spec,
            "identically_zero": self.identically_zero,
            "proven": self.proven,
            "witness": [sorted(f) for f in self.witness.flaps()] if self.witness else [],
            "verdicts": [
                {"flaps": [list(f) for f in flaps], **verdict.to_json()}
                for flaps, verdict in self.verdicts
            ],
        }
        if self.image is not None:
            out["image"] = {
                "n": self.image.n,
                "edges": [list(e) for e in self.image.edges()],
            }
        return out


def _flap_key(c: IndependentCollection) -> tuple[tuple[int, ...], ...]:
    return c.sort_key()


def _scan_failing_k(
    cls: GraphClass, h: Graph, coll: IndependentCollection, k_hi: int
) -> Optional[int]:
    """Smallest k with the wedge outside the class, or None if the scan cannot tell.

    Membership is downward closed in k (the k-wedge sits induced inside the
    (k+1)-wedge and catalog classes are hereditary), so the first failure found
    ascending is the smallest one.
    """
    for k in range(1, k_hi + 1):
        try:
            if not membership(cls, wedge_collection(h, coll, k).graph):
                return k
        except SizeBudgetExceededError:
            return None
    return None


def duplicable(
    cls: GraphClass,
    h: Graph,
    coll: IndependentCollection,
    *,
    k_max: int | None = None,
    rule: str | None = None,
) -> DuplicabilityVerdict:
    """Decide whether the collection stays in the class under duplication.

    Dispatches on the class's rule; passing ``rule`` overrides it.  Closed
    formula classes (bounded degeneracy) fall back to the generic scan here,
    since their membership predicate is cheap at any size; the closed formula
    itself lives in :func:`exponent_degenerate`.
    """
    if coll.host != h:
        raise ValueError("collection is over a different host graph")
    if not validate(coll):
        raise ValueError("invalid independent collection")
    effective = rule if rule is not None else cls.dup_rule
    if effective == CLOSED_FORMULA:
        effective = GENERIC_SCAN
    k_hi = k_max if k_max is not None else default_k_max(h)

    if effective == TORSO_TEST:
        ess = coll if is_essential(coll) else essentialize(coll)
        central, _, _ = central_torso(ess)
        torso_graphs = [central] + [t for t, _ in peripheral_torsos(ess)]
        ok = [membership(cls, t) for t in torso_graphs]
        evidence = {"type": "torso", "torso_sizes": [t.n for t in torso_graphs], "in_class": ok}
        if all(ok):
            return DuplicabilityVerdict(DUPLICABLE_PROVEN, evidence=evidence)
        return DuplicabilityVerdict(
            NOT_DUPLICABLE, failing_k=_scan_failing_k(cls, h, coll, k_hi), evidence=evidence
        )

    if effective == WEDGE_THRESHOLD:
        w = cls.wedge_threshold()
        member = membership(cls, wedge_collection(h, coll, w).graph)
        evidence = {"type": "wedge_threshold", "k": w, "in_class": member}
        if member:
            return DuplicabilityVerdict(DUPLICABLE_PROVEN, evidence=evidence)
        failing = _scan_failing_k(cls, h, coll, w - 1)
        return DuplicabilityVerdict(
            NOT_DUPLICABLE, failing_k=failing if failing is not None else w, evidence=evidence
        )

    if effective == GENERIC_SCAN:
        for k in range(1, k_hi + 1):
            if not membership(cls, wedge_collection(h, coll, k).graph):
                # a single failure is a proven NO: wedges grow as induced
                # subgraphs and the class is hereditary
                return DuplicabilityVerdict(
                    NOT_DUPLICABLE, failing_k=k, evidence={"type": "scan", "k": k}
                )
        return DuplicabilityVerdict(
            DUPLICABLE_EMPIRICAL,
            tested_up_to_k=k_hi,
            evidence={"type": "scan", "k": k_hi},
        )

    raise ValueError(f"unknown duplicability rule {effective!r}")


def dup_exponent(
    cls: GraphClass,
    h: Graph,
    mode: str = "subgraph",
    *,
    k_max: int | None = None,
    rule: str | None = None,
    max_order: int | None = None,
) -> ExponentReport:
    """Maximum size of a duplicable essential collection, with witness.

    Subgraph and induced counts share the same exponent for the catalog's
    monotone classes, so ``mode`` is recorded but does not change the search.
    """
    if mode not in ("subgraph", "induced"):
        raise ValueError("dup_exponent handles subgraph and induced modes only")
    if not membership(cls, h):
        raise PatternNotInClassError(f"pattern is not in class {cls.spec}")
    if cls.dup_rule == CLOSED_FORMULA and rule is None and max_order is None:
        rep = exponent_degenerate(h, cls.d, mode=mode)
        return rep

    bound = max_order if max_order is not None else class_order_bound(cls)
    method = rule if rule is not None else cls.dup_rule
    if method == CLOSED_FORMULA:
        method = GENERIC_SCAN
    colls = sorted(
        enumerate_essential_collections(h, bound),
        key=lambda c: (-c.size, c.total_order, c.sort_key()),
    )
    verdicts: list[tuple[tuple, DuplicabilityVerdict]] = []
    for c in colls:
        verdict = duplicable(cls, h, c, k_max=k_max, rule=rule)
        verdicts.append((_flap_key(c), verdict))
        if verdict.is_duplicable:
            return ExponentReport(
                exponent=c.size,
                mode=mode,
                method=method,
                class_spec=cls.spec,
                witness=c,
                verdicts=tuple(verdicts),
                proven=verdict.is_proven,
            )
    # only the empty collection survives: the pattern itself witnesses n^0
    empty = IndependentCollection(h, ())
    verdicts.append(((), DuplicabilityVerdict(DUPLICABLE_PROVEN, evidence={"type": "empty"})))
    return ExponentReport(
        exponent=0,
        mode=mode,
        method=method,
        class_spec=cls.spec,
        witness=empty,
        verdicts=tuple(verdicts),
    )


def exponent_degenerate(h: Graph, d: int, mode: str = "subgraph") -> ExponentReport:
    """Exponent over d-degenerate hosts: the low-degree independence number.

    A pattern that is not itself d-degenerate embeds in no host at all; that is
    reported as an identically zero count rather than an exponent.
    """
    spec = f"degenerate:{d}"
    if degeneracy(h)[0] > d:
        return ExponentReport(
            exponent=0,
            mode=mode,
            method="degenerate_formula",
            class_spec=spec,
            witness=None,
            identically_zero=True,
        )
    witness_set = max_low_degree_independent_set(h, d)
    witness = collection_from_flaps(h, [{v} for v in sorted(witness_set)])
    verdict = DuplicabilityVerdict(
        DUPLICABLE_PROVEN,
        evidence={"type": "degenerate_formula", "witness_vertices": sorted(witness_set)},
    )
    return ExponentReport(
        exponent=len(witness_set),
        mode=mode,
        method="degenerate_formula",
        class_spec=spec,
        witness=witness,
        verdicts=((witness.sort_key(), verdict),),
    )


def end_block_flaps(h: Graph) -> list[frozenset[int]]:
    """One flap per end-block: its vertices minus its (at most one) cut-vertex."""
    out = []
    for b in blocks(h):
        if b.is_end_block:
            out.append(b.vertices - b.cut_vertices)
    return out


def exponent_outerplanar(h: Graph, mode: str = "subgraph") -> ExponentReport:
    """Closed formula for outerplanar hosts: the number of end-blocks."""
    if not is_outerplanar(h):
        raise PatternNotInClassError("pattern is not outerplanar")
    flaps = end_block_flaps(h)
    witness = collection_from_flaps(h, flaps)
    verdict = DuplicabilityVerdict(
        DUPLICABLE_PROVEN,
        evidence={"type": "outerplanar_formula", "end_blocks": len(flaps)},
    )
    return ExponentReport(
        exponent=len(flaps),
        mode=mode,
        method="outerplanar_formula",
        class_spec="outerplanar",
        witness=witness,
        verdicts=((witness.sort_key(), verdict),),
    )


def _merge_nonadjacent(g: Graph, u: int, v: int) -> Graph:
    """Identify the non-adjacent vertices u and v (u absorbs v)."""
    relabel = {}
    nxt = 0
    for w in range(g.n):
        if w == v:
            continue
        relabel[w] = nxt
        nxt += 1
    relabel[v] = relabel[u]
    edges = {(min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) for a, b in g.edges()}
    return Graph(g.n - 1, sorted(edges))


def homomorphic_images(h: Graph) -> tuple[Graph, ...]:
    """All onto-homomorphism images of h up to isomorphism, h included.

    Homomorphic images are exactly the graphs reachable by repeatedly
    identifying non-adjacent vertex pairs.
    """
    seen: dict[str, Graph] = {canonical_form(h): h}
    frontier = [h]
    while frontier:
        g = frontier.pop()
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.has_edge(u, v):
                    continue
                q = _merge_nonadjacent(g, u, v)
                key = canonical_form(q)
                if key not in seen:
                    seen[key] = q
                    frontier.append(q)
    return tuple(g for _, g in sorted(seen.items(), key=lambda kv: (kv[1].n, kv[0])))


def hom_exponent(cls: GraphClass, h: Graph, *, k_max: int | None = None) -> ExponentReport:
    """Homomorphism-count exponent: the best subgraph exponent over images in the class.

    Only monotone classes are supported; for merely hereditary classes the
    count is not controlled by image subgraph counts and no formula is claimed.
    """
    if not cls.is_monotone:
        raise ValueError("hom exponent is only defined over monotone classes")
    images = [g for g in homomorphic_images(h) if membership(cls, g)]
    if not images:
        # hereditary class: every homomorphic image sits induced inside the
        # host, so no host admits any homomorphism at all
        return ExponentReport(
            exponent=0,
            mode="homomorphism",
            method="hom_reduction",
            class_spec=cls.spec,
            witness=None,
            identically_zero=True,
        )
    best: tuple[Graph, ExponentReport] | None = None
    for img in images:
        rep = dup_exponent(cls, img, "subgraph", k_max=k_max)
        if best is None or rep.exponent > best[1].exponent:
            best = (img, rep)
    img, rep = best
    return ExponentReport(
        exponent=rep.exponent,
        mode="homomorphism",
        method="hom_reduction",
        class_spec=cls.spec,
        witness=rep.witness,
        verdicts=rep.verdicts,
        proven=rep.proven,
        image=img,
    )
