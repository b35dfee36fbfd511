"""Exact subset-distance indices on graphs, tree transforms that iron
branches toward paths, spanning-tree constructions with checkable
certificates, and rational bound evaluators."""

from .bounds import (
    BOUND_IDS,
    BoundReport,
    applicable,
    avg_upper_min_degree,
    avg_upper_triangle_free,
    bound_rhs,
    check,
    sw_upper,
    sw_upper_min_degree,
    sw_upper_triangle_free,
    wiener_upper,
    wiener_upper_min_degree,
    wiener_upper_two_connected,
)
from .construct import (
    MatchingCertificate,
    PackingCertificate,
    certificate_from_json,
    certificate_to_json,
    matching_spanning_tree,
    packing_spanning_tree,
    verify_certificate,
)
from .errors import GraphFormatError, PreconditionError
from .families import (
    SweepRow,
    classic,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    min_degree_extremal,
    path_graph,
    sequential_sum,
    star_graph,
    sweep_csv,
    tightness_sweep,
    triangle_free_extremal,
)
from .graph import (
    Graph,
    all_pairs_distances,
    bfs_distances,
    bfs_from_set,
    diameter,
    edge_distance,
    format_edge_list,
    has_triangle,
    is_connected,
    is_tree,
    is_two_connected,
    line_graph,
    parse_edge_list,
    power_graph,
)
from .steiner import (
    avg_steiner_distance,
    steiner_distance,
    steiner_distance_tree,
    steiner_wiener,
    steiner_wiener_weighted,
    steiner_wiener_weighted_naive,
    steiner_wiener_weighted_tree,
)
from .transforms import (
    BranchMove,
    moves_to_json,
    relocate_branches,
    relocation_sw_delta,
    straighten_to_path,
    weighted_sw_bound,
)
from .weights import WeightFn, as_weights, parse_weight_file

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "GraphFormatError",
    "PreconditionError",
    "WeightFn",
    "as_weights",
    "parse_weight_file",
    "bfs_distances",
    "bfs_from_set",
    "all_pairs_distances",
    "diameter",
    "is_connected",
    "is_tree",
    "is_two_connected",
    "has_triangle",
    "power_graph",
    "line_graph",
    "edge_distance",
    "parse_edge_list",
    "format_edge_list",
    "steiner_distance",
    "steiner_distance_tree",
    "steiner_wiener",
    "avg_steiner_distance",
    "steiner_wiener_weighted",
    "steiner_wiener_weighted_naive",
    "steiner_wiener_weighted_tree",
    "BranchMove",
    "relocate_branches",
    "relocation_sw_delta",
    "straighten_to_path",
    "weighted_sw_bound",
    "moves_to_json",
    "BOUND_IDS",
    "BoundReport",
    "bound_rhs",
    "applicable",
    "check",
    "wiener_upper",
    "wiener_upper_two_connected",
    "sw_upper",
    "wiener_upper_min_degree",
    "sw_upper_min_degree",
    "avg_upper_min_degree",
    "sw_upper_triangle_free",
    "avg_upper_triangle_free",
    "PackingCertificate",
    "MatchingCertificate",
    "packing_spanning_tree",
    "matching_spanning_tree",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite",
    "classic",
    "sequential_sum",
    "min_degree_extremal",
    "triangle_free_extremal",
    "SweepRow",
    "tightness_sweep",
    "sweep_csv",
]
