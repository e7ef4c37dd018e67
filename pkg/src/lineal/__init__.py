"""DFS spanning trees with few or many leaves.

Kernelization driven by vertex-cover structure, tuple-guessing XP/FPT
solvers for the dual problems, and an exhaustive enumeration oracle that
verifies everything at desk scale.
"""

from .formats import (
    DuplicateEdgeError,
    GraphParseError,
    LabelOverflowError,
    LoadedGraph,
    MalformedLineError,
    SelfLoopError,
    parse_graph,
    parse_witness,
    serialize_graph,
    witness_to_jsonable,
)
from .generate import FAMILIES, GenerationError, generate
from .graphs import (
    Graph,
    common_neighbors,
    components_outside,
    greedy_cover,
    induced_subgraph,
    is_connected,
    pendant_set,
)
from .kernel import (
    Decided,
    KernelOutcome,
    PendantDeleted,
    ProblemInstance,
    Reduced,
    ReductionTrace,
    UnlabeledDeleted,
    Variant,
    kernel_dual_max,
    kernel_dual_min,
    kernel_max_llt,
    kernel_min_llt,
    kernelize,
    reduce_with_cover,
    size_bound,
    trim_common_neighbors,
    trim_pendants,
)
from .solve import (
    BudgetExceeded,
    Decision,
    SolverBudget,
    solve_dual_fpt,
    solve_dual_fpt_with_kernel,
    solve_dual_max_xp,
    solve_dual_min_xp,
    solve_exact_oracle,
)
from .trees import (
    ORACLE_LIMIT_DEFAULT,
    AncestorIndex,
    InvalidTreeError,
    OracleLimitError,
    RootedSpanningTree,
    dfs_any,
    dfs_tree_violation,
    enumerate_dfs_trees,
    extendable,
    extendable_all_internal,
    extendable_all_leaves,
    internal_profile,
    internal_vertices,
    is_dfs_tree,
    tree_respecting_ordering,
)

__version__ = "0.1.0"
