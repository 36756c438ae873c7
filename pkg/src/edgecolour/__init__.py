"""k-edge colouring via semi-core reduction and colouring extension."""

from .colouring import (
    ColouringError,
    PartialEdgeColouring,
    Verdict,
    common_missing,
    kempe_swap,
    missing_colours,
    verify_proper,
)
from .extension import ExtensionInvariantError, ExtensionState, extend
from .graph import (
    Graph,
    GraphError,
    SemiCoreDecomposition,
    build_graph,
    decompose,
    induced_subgraph,
    max_degree,
)
from .semicore import count_search_nodes, solve_exact
from .solver import SolveReport, chromatic_index, oracle_solve, solve

__all__ = [
    "ColouringError", "PartialEdgeColouring", "Verdict", "common_missing", "kempe_swap",
    "missing_colours", "verify_proper", "ExtensionInvariantError", "ExtensionState",
    "extend", "Graph", "GraphError", "SemiCoreDecomposition", "build_graph", "decompose",
    "induced_subgraph", "max_degree", "count_search_nodes", "solve_exact", "SolveReport",
    "chromatic_index", "oracle_solve", "solve",
]
