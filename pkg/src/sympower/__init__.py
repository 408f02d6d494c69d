"""Symmetric powers of graphs.

G[k] has the weight-k pebble configurations of a base graph as vertices,
two configurations adjacent when one becomes the other by moving some
pebbles, each along a single edge. The package builds G[k] explicitly,
computes exact independence numbers, evaluates the closed-form bounds, and
audits the combinatorial devices behind the five-cycle's tightened bound.
"""

from .bounds import (
    BoundsReport,
    CapacityEstimate,
    CapacitySample,
    ChunkKey,
    c5_upper_bound,
    check_chunk_independence,
    chunk_partition,
    estimate_capacity,
    lower_bound,
    make_report,
    upper_bound_theta,
)
from .configurations import (
    Config,
    adjacent,
    configuration_count,
    enumerate_configurations,
    find_transport,
    format_configuration,
    parse_configuration,
    rank,
    unrank,
    validate_transport,
)
from .errors import BudgetExhaustedError, CapExceededError, GraphFormatError
from .graphs import (
    Graph,
    alpha_exact,
    clique_cover_number,
    closed_neighborhood,
    complement,
    construct_named,
    is_independent,
    parse_graph,
    vertex_mask,
)
from .mis import (
    SolveReport,
    heuristic_search,
    random_maximal_set,
    solve_exact,
    verify_certificate,
)
from .quotient import QuotientGraph, build_quotient, export_edge_list, strong_power_quotient_oracle

__all__ = [
    "BoundsReport", "BudgetExhaustedError", "CapExceededError", "CapacityEstimate",
    "CapacitySample", "ChunkKey", "Config", "Graph", "GraphFormatError",
    "QuotientGraph", "SolveReport", "adjacent", "alpha_exact", "build_quotient",
    "c5_upper_bound", "check_chunk_independence", "chunk_partition",
    "clique_cover_number", "closed_neighborhood", "complement",
    "configuration_count", "construct_named", "enumerate_configurations",
    "estimate_capacity", "export_edge_list", "find_transport",
    "format_configuration", "heuristic_search", "is_independent", "lower_bound",
    "make_report", "parse_configuration", "parse_graph", "random_maximal_set",
    "rank", "solve_exact", "strong_power_quotient_oracle", "unrank",
    "upper_bound_theta", "validate_transport", "verify_certificate", "vertex_mask",
]
