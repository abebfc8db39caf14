"""Antichains of integer vectors with no k-crossing pair.

Two vectors A, B in Z^w cross at threshold k when A beats B by at least
k on some coordinate and B beats A by at least k on another.  At k = 1
crossing is just incomparability, so an antichain avoiding k-crossing
pairs sits between two classical regimes; the central quantity is the
maximum size of such a family, conjectured to be k^(w-1).

The package provides the crossing predicates and family verification
(`core`), the known extremal constructions (`constructions`), the
published lower/upper bounds (`bounds`), exact exhaustive certification
on small instances via clique search (`search`), and the order-theoretic
side where these families arise from lattices of maximum antichains
(`posets`).  The `crossvec` command line exposes all of it.
"""

from .bounds import (
    BoundsReport,
    best_upper_bound,
    ceiling_upper_bound,
    difference_upper_bound,
    distinct_values_bound_check,
    exact_value,
    generalized_bounds,
    height_signature,
    lower_bound,
    recursive_upper_bound,
    residue_signature,
    split_upper_bound,
)
from .constructions import (
    cyclic_family,
    cyclic_fixup_vector,
    generalized_product_family,
    inductive_lift,
    lexicographic_family,
    non_ranked_example,
    product_family,
    weak_compression_family,
)
from .core import (
    CrossingThresholds,
    Family,
    ParseError,
    VerificationReport,
    dual_orders_check,
    family_from_text,
    family_to_text,
    is_comparable,
    is_generalized_crossing,
    is_k_crossing,
    load_family,
    rank,
    save_family,
    verify,
)
from .posets import (
    MaxAntichainLattice,
    Poset,
    chain,
    contains_k_plus_k,
    disjoint_chains,
    interval_order,
    is_lattice,
    lattice_width,
    lattice_width_witness,
    load_poset,
    max_antichains,
    poset_from_text,
    poset_to_text,
    random_interval_order,
    reduce_to_vectors,
    save_poset,
    width,
)
from .search import (
    BoxTooLargeError,
    CompatibilityGraph,
    CrossDigraph,
    SearchBox,
    SearchLimits,
    SearchResult,
    auto_box,
    build_compatibility_graph,
    build_cross_digraph,
    compress,
    compression_box,
    exists_family,
    max_family_in_box,
    max_family_size,
    normalize,
    ranked_max_family_size,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BoxTooLargeError",
    "CompatibilityGraph",
    "CrossDigraph",
    "CrossingThresholds",
    "Family",
    "MaxAntichainLattice",
    "ParseError",
    "Poset",
    "SearchBox",
    "SearchLimits",
    "SearchResult",
    "VerificationReport",
    "auto_box",
    "best_upper_bound",
    "build_compatibility_graph",
    "build_cross_digraph",
    "ceiling_upper_bound",
    "chain",
    "compress",
    "compression_box",
    "contains_k_plus_k",
    "cyclic_family",
    "cyclic_fixup_vector",
    "difference_upper_bound",
    "disjoint_chains",
    "distinct_values_bound_check",
    "dual_orders_check",
    "exact_value",
    "exists_family",
    "family_from_text",
    "family_to_text",
    "generalized_bounds",
    "generalized_product_family",
    "height_signature",
    "inductive_lift",
    "interval_order",
    "is_comparable",
    "is_generalized_crossing",
    "is_k_crossing",
    "is_lattice",
    "lattice_width",
    "lattice_width_witness",
    "lexicographic_family",
    "load_family",
    "load_poset",
    "lower_bound",
    "max_antichains",
    "max_family_in_box",
    "max_family_size",
    "non_ranked_example",
    "normalize",
    "poset_from_text",
    "poset_to_text",
    "product_family",
    "random_interval_order",
    "rank",
    "ranked_max_family_size",
    "recursive_upper_bound",
    "reduce_to_vectors",
    "residue_signature",
    "save_family",
    "save_poset",
    "split_upper_bound",
    "verify",
    "weak_compression_family",
    "width",
]
