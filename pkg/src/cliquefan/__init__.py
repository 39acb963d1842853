"""Odd-clique-fan search in dense graphs, with exact desk-scale oracles."""

from .finder import (
    DegreeBoundReport,
    DensityParams,
    HypothesisViolation,
    SearchCertificate,
    SearchInvariantError,
    ThresholdRecord,
    check_violation,
    extend_clique,
    fan_at_vertex_r1,
    find_odd_fan,
    peel_dense_subgraph,
    replay_certificate,
    rotate_clique,
    search_thresholds,
    tuple_lex_less,
)
from .generators import (
    FanShape,
    TupleShape,
    fan_graph,
    generalized_fan,
    gnp_random,
    rt_lower_construction,
    triangle_free_process,
    turan_graph,
)
from .graphs import (
    Graph,
    common_neighbors,
    induced_subgraph,
    is_clique,
    is_independent,
    min_degree,
)
from .invariants import (
    BudgetExceeded,
    IndependentSet,
    Matching,
    greedy_independent_from_matching,
    max_independent_set,
    max_matching,
)
from .witness import (
    CliqueWitness,
    FanEmbedding,
    GeneralizedFanEmbedding,
    find_clique,
    find_fan,
    verify_fan,
    verify_generalized_fan,
)

__version__ = "0.1.0"
