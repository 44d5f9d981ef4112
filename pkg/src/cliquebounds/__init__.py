"""Exact verification engine for vertex-localized clique-count bounds."""

from .bounds import (
    BoundReport,
    check_theorem,
    heavy_cycle_set,
    heavy_path_set,
    luo_dominance,
    reduction_invariance,
    thm1_rhs,
    thm2_rhs,
)
from .cliques import (
    ContributionTable,
    binom,
    contribution_table,
    contribution_upper_bound,
    count_cliques,
    count_cliques_touching,
    enumerate_cliques,
)
from .extremal import (
    BlockDecomposition,
    block_decomposition,
    components_are_cliques,
    extremal_predicate,
    is_block_graph,
    is_hamiltonian,
    is_parent_dominated,
)
from .graphs import (
    BlockSpec,
    Graph,
    GraphParseError,
    ResourceLimitError,
    canonical_mask,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_graphs,
    from_edges,
    from_pair_mask,
    generate_pdbg,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_clique_forest,
    random_graph,
    to_pair_mask,
    write_graph6,
)
from .oracle import exhaustive_verify, identity_grid, labeled_crosscheck, path_proof_claims
from .transforms import (
    ClosureBudgetError,
    PeelStage,
    PeelTrace,
    TransformClosure,
    peel,
    simple_transforms,
    transform_closure,
    verify_closure_lemmas,
    verify_peel_decomposition,
)
from .weights import (
    VertexWeights,
    compute_weights,
    compute_weights_block_graph,
    longest_path_from,
)

__all__ = [
    "BlockDecomposition",
    "BlockSpec",
    "BoundReport",
    "ClosureBudgetError",
    "ContributionTable",
    "Graph",
    "GraphParseError",
    "PeelStage",
    "PeelTrace",
    "ResourceLimitError",
    "TransformClosure",
    "VertexWeights",
    "binom",
    "block_decomposition",
    "canonical_mask",
    "check_theorem",
    "complete_graph",
    "components_are_cliques",
    "compute_weights",
    "compute_weights_block_graph",
    "contribution_table",
    "contribution_upper_bound",
    "count_cliques",
    "count_cliques_touching",
    "cycle_graph",
    "disjoint_union",
    "enumerate_cliques",
    "enumerate_graphs",
    "exhaustive_verify",
    "extremal_predicate",
    "from_edges",
    "from_pair_mask",
    "generate_pdbg",
    "heavy_cycle_set",
    "heavy_path_set",
    "identity_grid",
    "is_block_graph",
    "is_connected",
    "is_hamiltonian",
    "is_parent_dominated",
    "labeled_crosscheck",
    "longest_path_from",
    "luo_dominance",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "path_proof_claims",
    "peel",
    "random_clique_forest",
    "random_graph",
    "reduction_invariance",
    "simple_transforms",
    "thm1_rhs",
    "thm2_rhs",
    "to_pair_mask",
    "transform_closure",
    "verify_closure_lemmas",
    "verify_peel_decomposition",
    "write_graph6",
]
