"""Growth exponents for pattern counts in sparse graph classes, with oracles."""

from .counting import (
    CountMode,
    automorphism_count,
    count,
    count_homomorphisms,
    count_induced_copies,
    count_injective,
    count_subgraph_copies,
)
from .classes import (
    GraphClass,
    class_order_bound,
    degenerate_class,
    forests_class,
    has_minor,
    has_shallow_kst_model,
    has_subdivision,
    kst_minor_free_class,
    membership,
    minor_free_class,
    outerplanar_class,
    parse_class_spec,
    pathwidth,
    pathwidth_class,
    planar_class,
    subgraph_restricted_class,
    treewidth,
    treewidth_class,
)
from .duplication import WedgeResult, verify_lower_bound, wedge_collection, wedge_set
from .errors import BudgetExceededError, PatternNotInClassError, SizeBudgetExceededError
from .exponent import (
    DuplicabilityVerdict,
    ExponentReport,
    dup_exponent,
    duplicable,
    exponent_degenerate,
    exponent_outerplanar,
    hom_exponent,
    homomorphic_images,
)
from .graphs import (
    Graph,
    ball,
    blocks,
    boundary,
    build,
    canonical_form,
    components,
    degeneracy,
    end_block_count,
    from_edge_list,
    from_graph6,
    independence_number,
    is_isomorphic,
    low_degree_independence_number,
    radius,
    to_edge_list,
    to_graph6,
)
from .basin import OrderedHost, basin, container_bound_check, degeneracy_host, extract_collection
from .lab import (
    GrowthSeries,
    brute_ex,
    construction_series,
    enumerate_class_members,
    enumerate_graphs,
    slope_fit,
    verify_exponent,
)
from .separations import (
    IndependentCollection,
    Separation,
    central_torso,
    collection_from_flaps,
    enumerate_essential_collections,
    essentialize,
    flap_number,
    is_essential,
    peripheral_torsos,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
