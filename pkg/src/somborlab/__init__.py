"""Exact-arithmetic laboratory for Sombor indices and coindices of two-trees.

Builds and recognizes two-trees, computes the index and coindex exactly as
integer combinations of square roots, enumerates all non-isomorphic
two-trees of small order, checks the known extremal results exhaustively,
and reports evidence on the still-open extremes.
"""

from .enumeration import EnumLevel, count_two_trees, enumerate_two_trees, oracle_filter_count
from .extremal import conjecture_report, rank_by, verify_theorems
from .families import (
    TwoTreeRecipe,
    attach,
    complete,
    complete_bipartite,
    from_recipe,
    l_graph,
    linear_two_tree,
    random_recipe,
    x_graph,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .graphs import (
    CanonicalKey,
    CapacityError,
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_key,
    is_two_tree,
)
from .indices import IndexValue, edge_weight, sombor_coindex, sombor_index, total_pair_sum
from .radicals import RadicalSum, sqrt_int

__version__ = "0.1.0"

__all__ = [
    "CanonicalKey",
    "CapacityError",
    "EnumLevel",
    "Graph",
    "IndexValue",
    "RadicalSum",
    "TwoTreeRecipe",
    "are_isomorphic",
    "attach",
    "canonical_form",
    "canonical_key",
    "complete",
    "complete_bipartite",
    "conjecture_report",
    "count_two_trees",
    "edge_weight",
    "enumerate_two_trees",
    "from_graph6",
    "from_recipe",
    "is_two_tree",
    "l_graph",
    "linear_two_tree",
    "oracle_filter_count",
    "random_recipe",
    "rank_by",
    "sombor_coindex",
    "sombor_index",
    "sqrt_int",
    "to_dot",
    "to_graph6",
    "total_pair_sum",
    "verify_theorems",
    "x_graph",
]
