"""Exact solver and verification lab for the domination game on small graphs."""

from .errors import ContractError, DomGameError, FormatError, GuardError
from .graphs import (
    Graph,
    DominationState,
    GraphStats,
    Mover,
    ResidualGraph,
    closed_neighborhood,
    domination_number,
    emit_edge_list,
    emit_graph6,
    graph_stats,
    load_graph_text,
    parse_edge_list,
    parse_graph6,
    residual,
)
from .solver import (
    GameSolver,
    SolveResult,
    SolveStats,
    TraceStep,
    extract_trace,
    game_value,
    gamma_pair,
    legal_moves,
    oracle_value,
    prune_dominated_moves,
    staller_cheap_move,
    verify_invariants,
)
from .families import (
    LabeledGraph,
    PartialFixture,
    make_partial_fixture,
    make_spanning_pair,
    make_tree_family,
)
from .census import (
    CensusRecord,
    ConjectureReport,
    LowerBoundReport,
    conjecture_check,
    enumerate_trees,
    lower_bound_check,
    pair_census,
    tree_codes,
    tree_lower_bound,
)
from .spanning import (
    Prop9Report,
    SpanningReport,
    TreeExtreme,
    enumerate_spanning_trees,
    spanning_extremes,
    verify_prop9,
)
from .smallgraphs import connected_graphs_g6, random_graphs
from .verify import ClauseResult, VerifyReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "DomGameError",
    "FormatError",
    "GuardError",
    "Graph",
    "DominationState",
    "GraphStats",
    "Mover",
    "ResidualGraph",
    "closed_neighborhood",
    "domination_number",
    "emit_edge_list",
    "emit_graph6",
    "graph_stats",
    "load_graph_text",
    "parse_edge_list",
    "parse_graph6",
    "residual",
    "GameSolver",
    "SolveResult",
    "SolveStats",
    "TraceStep",
    "extract_trace",
    "game_value",
    "gamma_pair",
    "legal_moves",
    "oracle_value",
    "prune_dominated_moves",
    "staller_cheap_move",
    "verify_invariants",
    "LabeledGraph",
    "PartialFixture",
    "make_partial_fixture",
    "make_spanning_pair",
    "make_tree_family",
    "CensusRecord",
    "ConjectureReport",
    "LowerBoundReport",
    "conjecture_check",
    "enumerate_trees",
    "lower_bound_check",
    "pair_census",
    "tree_codes",
    "tree_lower_bound",
    "Prop9Report",
    "SpanningReport",
    "TreeExtreme",
    "enumerate_spanning_trees",
    "spanning_extremes",
    "verify_prop9",
    "connected_graphs_g6",
    "random_graphs",
    "ClauseResult",
    "VerifyReport",
    "run_suites",
    "__version__",
]
