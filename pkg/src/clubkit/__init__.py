"""Exact solvers and a verification harness for the clique / 2-club link.

The package builds a gadget graph from any source graph H such that H has
a clique of size k exactly when the gadget has a 2-club of a computable
target size, solves both problems exactly at desk scale, and machine
checks the correspondence together with the gadget's distance-two
proximity to 2-club cluster graphs.
"""

from .cluster import (
    DELETION_BUDGET_LIMIT,
    DeletionCertificate,
    is_s_club_cluster,
    min_deletion_to_s_club_cluster,
    verify_deletion,
)
from .errors import (
    ClubkitError,
    EmptyGraph,
    InvalidEdge,
    InvalidK,
    InvalidVertex,
    NotAClique,
    ParseError,
    TooLarge,
)
from .graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    build_graph,
    connected_components,
    diameter,
    induced_subgraph,
    is_s_club,
)
from .harness import (
    ENGINE_BRANCHING,
    ENGINE_BRUTE,
    EquivalenceRow,
    OracleCheckReport,
    VerifyReport,
    edge_mask_of,
    graph_from_edge_mask,
    labeled_graphs,
    oracle_check,
    run_equivalence_sweep,
    verify_instance,
)
from .io import DIMACS, EDGELIST, emit_graph, parse_graph, sniff_format
from .reduction import (
    GadgetLayout,
    GadgetValidation,
    ReducedInstance,
    extract_clique,
    format_roles,
    forward_map,
    reduce,
    target_polynomial,
    target_size,
    validate_gadget,
)
from .solvers import (
    BRUTE_FORCE_LIMIT,
    SolveResult,
    brute_force_max_clique,
    brute_force_max_s_club,
    has_s_club_of_size,
    max_clique,
    max_s_club,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "ClubkitError",
    "DELETION_BUDGET_LIMIT",
    "DIMACS",
    "DeletionCertificate",
    "EDGELIST",
    "ENGINE_BRANCHING",
    "ENGINE_BRUTE",
    "EmptyGraph",
    "EquivalenceRow",
    "GadgetLayout",
    "GadgetValidation",
    "Graph",
    "InvalidEdge",
    "InvalidK",
    "InvalidVertex",
    "NotAClique",
    "OracleCheckReport",
    "ParseError",
    "ReducedInstance",
    "SolveResult",
    "TooLarge",
    "UNREACHABLE",
    "VerifyReport",
    "bfs_distances",
    "brute_force_max_clique",
    "brute_force_max_s_club",
    "build_graph",
    "connected_components",
    "diameter",
    "edge_mask_of",
    "emit_graph",
    "extract_clique",
    "format_roles",
    "forward_map",
    "graph_from_edge_mask",
    "has_s_club_of_size",
    "induced_subgraph",
    "is_s_club",
    "is_s_club_cluster",
    "labeled_graphs",
    "max_clique",
    "max_s_club",
    "min_deletion_to_s_club_cluster",
    "oracle_check",
    "parse_graph",
    "reduce",
    "run_equivalence_sweep",
    "sniff_format",
    "target_polynomial",
    "target_size",
    "validate_gadget",
    "verify_deletion",
    "verify_instance",
]
