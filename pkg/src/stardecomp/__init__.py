"""Exact k-star decomposition toolkit: solver, embedder, families, oracles."""

from .embedding import (
    BoundReport,
    EmbeddingCertificate,
    Rejection,
    bound_report,
    degree_pair_check,
    embed,
    embed_large_case,
    embed_small_case,
    guaranteed_s,
    obstacle_check,
)
from .graphs import (
    Graph,
    JoinLayout,
    complete_graph,
    disjoint_cliques,
    empty_graph,
    graph_from_edges,
    join,
    join_edge_count,
    read_graph,
    write_graph,
)
from .independence import (
    BudgetExceeded,
    caro_wei_bounds,
    clique_refined_bound,
    independence_number,
    maximum_independent_set,
)
from .solver import (
    DeficiencyWitness,
    Star,
    StarDecomposition,
    decide_star_decomposition,
    decompose_complete,
    deficiency,
    is_precentral,
    shrink_witness,
    two_star_decompose,
    validate_decomposition,
)

__all__ = [
    "BoundReport",
    "BudgetExceeded",
    "DeficiencyWitness",
    "EmbeddingCertificate",
    "Graph",
    "JoinLayout",
    "Rejection",
    "Star",
    "StarDecomposition",
    "bound_report",
    "caro_wei_bounds",
    "clique_refined_bound",
    "complete_graph",
    "decide_star_decomposition",
    "decompose_complete",
    "deficiency",
    "degree_pair_check",
    "disjoint_cliques",
    "embed",
    "embed_large_case",
    "embed_small_case",
    "empty_graph",
    "graph_from_edges",
    "guaranteed_s",
    "independence_number",
    "is_precentral",
    "join",
    "join_edge_count",
    "maximum_independent_set",
    "obstacle_check",
    "read_graph",
    "shrink_witness",
    "two_star_decompose",
    "validate_decomposition",
    "write_graph",
]

__version__ = "0.1.0"
