"""kdelete: make a graph k-colorable by deleting provably few edges.

The partitioners take a graph promised to avoid some structure (triangles,
K_r, odd wheels, short odd cycles) and return a k-partition together with an
exact rational ceiling on the number of internal ("deleted") edges.  The
maxcut module turns the same machinery into 2-cut lower bounds, and the
oracle module brute-forces small instances so every ceiling is testable.
"""

from .cliquefree import (
    partition_clique_free,
    partition_triangle_free,
    partition_wheel_free,
    verify_clique_free,
    verify_wheel_free,
)
from .constructions import (
    blow_up,
    circulant,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    hypercube,
    mixing_check,
    petersen,
    random_graph,
    second_eigenvalue,
    spectral_lower_bound,
)
from .cover import exact_u, select_cover
from .errors import (
    BudgetExceeded,
    CapabilityError,
    InvariantViolation,
    KDeleteError,
    PreconditionError,
)
from .graphs import Graph, build_graph, format_edge_list, parse_edge_list
from .maxcut import (
    coarsen_cut,
    d_l_complete,
    local_search_cut,
    max_k_cut_exact,
    maxcut_dense_driver,
    maxcut_odd_cycle_free,
    surplus_compose,
)
from .oddgirth import (
    partition_odd_cycle_free,
    partition_odd_girth,
    scrub_short_odd_cycles,
)
from .oracle import exact_h, min_internal_partition
from .partition import BoundReport, VertexPartition

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceeded",
    "CapabilityError",
    "Graph",
    "InvariantViolation",
    "KDeleteError",
    "PreconditionError",
    "VertexPartition",
    "blow_up",
    "build_graph",
    "circulant",
    "coarsen_cut",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "d_l_complete",
    "exact_h",
    "exact_u",
    "format_edge_list",
    "hypercube",
    "local_search_cut",
    "max_k_cut_exact",
    "maxcut_dense_driver",
    "maxcut_odd_cycle_free",
    "min_internal_partition",
    "mixing_check",
    "parse_edge_list",
    "partition_clique_free",
    "partition_odd_cycle_free",
    "partition_odd_girth",
    "partition_triangle_free",
    "partition_wheel_free",
    "petersen",
    "random_graph",
    "scrub_short_odd_cycles",
    "second_eigenvalue",
    "select_cover",
    "spectral_lower_bound",
    "surplus_compose",
    "verify_clique_free",
    "verify_wheel_free",
]
