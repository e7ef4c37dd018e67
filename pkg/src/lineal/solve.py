"""Brute-force tuple solvers for the dual variants, the kernel-then-solve
pipeline, and the exhaustive oracle for all four variants.

The tuple solvers guess the discovery order of the k vertices that must end
up internal (or must absorb all internal vertices). A guessed order is only
viable if it is the discovery order of a DFS tree of the subgraph it
induces, so the search walks a prefix tree of orders instead of materializing
all n^k tuples: a prefix dies as soon as its forced DFS simulation does.
Extending a prefix by w is possible exactly when w has a neighbor on the
simulation stack and none among the already-popped vertices, which keeps the
walk equivalent to simulating every tuple from scratch.

Tuple prefixes could be partitioned across workers; the implementation is
sequential and reports the lexicographically first accepting tuple, which is
the contract partitioned workers would have to preserve.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, components_outside, is_connected
from .kernel import (
    Decided,
    KernelOutcome,
    PendantDeleted,
    ProblemInstance,
    Reduced,
    ReductionTrace,
    Variant,
    kernel_dual_max,
    kernel_dual_min,
)
from .trees import (
    ORACLE_LIMIT_DEFAULT,
    AncestorIndex,
    OracleLimitError,
    RootedSpanningTree,
    _components_chain_ok,
    _forced_runs,
    _leaves_have_outside_neighbor,
    _outside_is_independent_with_chains,
    dfs_any,
    is_dfs_tree,
)


@dataclass(frozen=True)
class Decision:
    """Yes/no answer, optionally with a full DFS tree certifying a yes.

    ``accepted_tuple`` records the internal-vertex guess that succeeded, when
    the answer came out of the tuple search; trivial branches leave it None.
    """

    answer: bool
    witness: RootedSpanningTree | None = None
    accepted_tuple: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SolverBudget:
    """Resource limits; exceeding one raises BudgetExceeded, never a wrong answer."""

    max_tuple_count: int = 100_000_000
    time_limit: float = 300.0
    oracle_vertex_limit: int = ORACLE_LIMIT_DEFAULT

    def __post_init__(self):
        if self.max_tuple_count <= 0 or self.time_limit <= 0 or self.oracle_vertex_limit <= 0:
            raise ValueError("budget fields must be positive")


class BudgetExceeded(RuntimeError):
    """The search ran out of tuple or time budget before deciding."""

    def __init__(self, phase: str):
        super().__init__(f"undecided: {phase} budget exhausted")
        self.phase = phase


def _tuple_search(g: Graph, k: int, check, budget: SolverBudget):
    """Walk all viable ordered k-tuples of distinct vertices, ascending.

    Maintains the forced-DFS state of the current prefix: the live stack,
    the set of popped (finished) vertices, and parents. `check` runs on each
    complete tuple's tree and returns a witness or None; the first witness
    wins, which is the lexicographically smallest accepting tuple.
    """
    n = g.vertex_count
    adj = g.adjacency
    nbr = g._neighbor_sets
    deadline = time.perf_counter() + budget.time_limit
    visits = 0

    parent: dict[int, int | None] = {}
    order: list[int] = []
    stack: list[int] = []
    popped: set[int] = set()
    found: list = []

    def descend() -> bool:
        nonlocal visits
        visits += 1
        if visits > budget.max_tuple_count:
            raise BudgetExceeded("tuple")
        if not (visits & 1023) and time.perf_counter() > deadline:
            raise BudgetExceeded("time")
        if len(order) == k:
            witness = check(order[0], parent, order)
            if witness is not None:
                found.append((tuple(order), witness))
                return True
            return False
        cands = sorted({w for v in stack for w in adj[v] if w not in parent})
        for w in cands:
            if any(q in nbr[w] for q in popped):
                continue
            j = len(stack) - 1
            while stack[j] not in nbr[w]:
                j -= 1
            cut = stack[j + 1 :]
            del stack[j + 1 :]
            parent[w] = stack[-1]
            order.append(w)
            stack.append(w)
            popped.update(cut)
            done = descend()
            stack.pop()
            order.pop()
            del parent[w]
            popped.difference_update(cut)
            stack.extend(cut)
            if done:
                return True
        return False

    for root in range(n):
        parent.clear()
        parent[root] = None
        order[:] = [root]
        stack[:] = [root]
        popped.clear()
        if descend():
            return found[0]
    return None


def _extend_keeping_covered_internal(g: Graph, t: RootedSpanningTree) -> RootedSpanningTree:
    """Grow t to a spanning tree by hanging each outside component below the
    deepest tree vertex its neighborhood touches, via a DFS of the component.

    Sound when extendable_all_internal holds: each component's boundary is a
    chain, so all its edges back into the tree reach ancestors, and every
    leaf of t picks up a child.
    """
    parent = dict(t.parent)
    idx = AncestorIndex.build(t)
    inside = t.parent
    for comp in components_outside(g, inside):
        boundary = {u for w in comp for u in g.adjacency[w] if u in inside}
        anchor = idx.deepest(boundary)
        start = min(w for w in comp if g.adjacent(w, anchor))
        parent[start] = anchor
        stack = [[start, 0]]
        seen = {start}
        while stack:
            v, i = stack[-1]
            av = g.adjacency[v]
            while i < len(av) and (av[i] not in comp or av[i] in seen):
                i += 1
            if i == len(av):
                stack.pop()
                continue
            stack[-1][1] = i + 1
            w = av[i]
            parent[w] = v
            seen.add(w)
            stack.append([w, 0])
    return RootedSpanningTree(t.root, parent)


def _extend_keeping_outside_leaves(g: Graph, t: RootedSpanningTree) -> RootedSpanningTree:
    """Grow t by attaching every outside vertex as a leaf under its deepest neighbor.

    Sound when extendable_all_leaves holds: outside vertices are pairwise
    non-adjacent and each sees only one root-to-leaf path of t.
    """
    parent = dict(t.parent)
    idx = AncestorIndex.build(t)
    inside = t.parent
    for v in range(g.vertex_count):
        if v not in inside:
            parent[v] = idx.deepest(g.adjacency[v])
    return RootedSpanningTree(t.root, parent)


def _checked(g: Graph, t: RootedSpanningTree, variant: Variant, k: int) -> RootedSpanningTree:
    """Validate a constructed witness instead of trusting the construction."""
    if not is_dfs_tree(g, t):
        raise RuntimeError("internal error: constructed witness is not a DFS tree")
    ic = t.internal_count()
    ok = ic >= k if variant is Variant.DUAL_MIN_LLT else ic <= k
    if not ok:
        raise RuntimeError(
            f"internal error: witness has {ic} internal vertices, variant {variant.value} k={k}"
        )
    return t


def solve_dual_min_xp(g: Graph, k: int, budget: SolverBudget | None = None) -> Decision:
    """Does g have a DFS tree with at least k internal vertices? Time n^O(k).

    Guesses the k internal vertices in discovery order; a guess is accepted
    when its tree extends to a DFS tree keeping all k internal.
    """
    budget = budget or SolverBudget()
    if g.vertex_count == 0 or not is_connected(g):
        return Decision(False)
    if k == 0:
        return Decision(True, witness=dfs_any(g, 0))
    if g.vertex_count <= k:
        return Decision(False)

    def check(root, parent, order):
        t = RootedSpanningTree(root, dict(parent), tuple(order))
        if not _leaves_have_outside_neighbor(g, t):
            return None
        idx = AncestorIndex.build(t)
        if not _components_chain_ok(g, t, idx):
            return None
        return _extend_keeping_covered_internal(g, t)

    hit = _tuple_search(g, k, check, budget)
    if hit is None:
        return Decision(False)
    tup, witness = hit
    return Decision(True, witness=_checked(g, witness, Variant.DUAL_MIN_LLT, k), accepted_tuple=tup)


def solve_dual_max_xp(g: Graph, k: int, budget: SolverBudget | None = None) -> Decision:
    """Does g have a DFS tree with at most k internal vertices? Time n^O(k).

    Guesses the k vertices allowed to be internal (including the root); all
    other vertices must be attachable as leaves.
    """
    budget = budget or SolverBudget()
    if g.vertex_count == 0 or not is_connected(g):
        return Decision(False)
    if g.vertex_count <= k:
        return Decision(True, witness=dfs_any(g, 0))
    if k == 0:
        # Only a one-vertex graph has a DFS tree with no internal vertex.
        if g.vertex_count == 1:
            return Decision(True, witness=dfs_any(g, 0))
        return Decision(False)

    def check(root, parent, order):
        t = RootedSpanningTree(root, dict(parent), tuple(order))
        idx = AncestorIndex.build(t)
        if not _outside_is_independent_with_chains(g, t, idx):
            return None
        return _extend_keeping_outside_leaves(g, t)

    hit = _tuple_search(g, k, check, budget)
    if hit is None:
        return Decision(False)
    tup, witness = hit
    return Decision(True, witness=_checked(g, witness, Variant.DUAL_MAX_LLT, k), accepted_tuple=tup)


def _lift_witness(g: Graph, trace: ReductionTrace, kernel_tree: RootedSpanningTree) -> RootedSpanningTree:
    """Pull a kernel witness back to the original graph.

    Survivor vertices keep their tree shape. Deleted pendants rejoin as leaf
    children of the cover vertex that kept them; deleted multi-neighbor
    vertices rejoin as leaves under their deepest surviving neighbor. Both
    re-attachments leave the internal-vertex count unchanged: a cover vertex
    that lost pendants still has a pendant child, and a deleted vertex's
    neighborhood is a chain of internal vertices in any kernel tree.
    """
    back = {new: old for old, new in trace.vertex_map.items()}
    parent: dict[int, int | None] = {
        back[v]: (None if p is None else back[p]) for v, p in kernel_tree.parent.items()
    }
    root = back[kernel_tree.root]
    base = RootedSpanningTree(root, dict(parent))
    idx = AncestorIndex.build(base)
    for ev in trace.events:
        if isinstance(ev, PendantDeleted):
            parent[ev.removed] = ev.kept_under
        else:
            parent[ev.removed] = idx.deepest(g.adjacency[ev.removed])
    return RootedSpanningTree(root, parent)


def solve_dual_fpt_with_kernel(
    inst: ProblemInstance, budget: SolverBudget | None = None, *, root: int = 0
) -> tuple[Decision, KernelOutcome]:
    """Kernelize, then run the tuple solver on the kernel. Time k^O(k) poly(n).

    Returns the decision together with the kernelization outcome so callers
    can report reduction statistics. Yes answers carry a witness lifted back
    to the original graph; its accepted tuple is reported in original ids.
    """
    budget = budget or SolverBudget()
    g, k = inst.graph, inst.k
    if inst.variant is Variant.DUAL_MIN_LLT:
        outcome = kernel_dual_min(inst, root=root)
        if isinstance(outcome, Decided):
            if outcome.answer:
                witness = _checked(g, dfs_any(g, root), inst.variant, k)
                return Decision(True, witness=witness), outcome
            return Decision(False), outcome
        sub = solve_dual_min_xp(outcome.instance.graph, k, budget)
    elif inst.variant is Variant.DUAL_MAX_LLT:
        outcome = kernel_dual_max(inst)
        if isinstance(outcome, Decided):
            if outcome.answer:
                witness = _checked(g, dfs_any(g, 0), inst.variant, k)
                return Decision(True, witness=witness), outcome
            return Decision(False), outcome
        sub = solve_dual_max_xp(outcome.instance.graph, k, budget)
    else:
        raise ValueError(f"no FPT pipeline for variant {inst.variant.value}")
    if not sub.answer:
        return Decision(False), outcome
    lifted = _checked(g, _lift_witness(g, outcome.trace, sub.witness), inst.variant, k)
    tup = None
    if sub.accepted_tuple is not None:
        back = {new: old for old, new in outcome.trace.vertex_map.items()}
        tup = tuple(back[v] for v in sub.accepted_tuple)
    return Decision(True, witness=lifted, accepted_tuple=tup), outcome


def solve_dual_fpt(
    inst: ProblemInstance, budget: SolverBudget | None = None, *, root: int = 0
) -> Decision:
    """Kernel-then-solve for the dual variants; answer matches the original instance."""
    decision, _ = solve_dual_fpt_with_kernel(inst, budget, root=root)
    return decision


def solve_exact_oracle(inst: ProblemInstance, budget: SolverBudget | None = None) -> Decision:
    """Decide any variant by enumerating every DFS tree; desk scale only.

    The witness is the first qualifying tree in enumeration order. Refuses
    graphs above the oracle vertex limit, and raising that limit does not
    disable the time budget.
    """
    budget = budget or SolverBudget()
    g, k = inst.graph, inst.k
    n = g.vertex_count
    if n > budget.oracle_vertex_limit:
        raise OracleLimitError(
            f"graph has {n} vertices, oracle limit is {budget.oracle_vertex_limit}"
        )
    if n == 0 or not is_connected(g):
        return Decision(False)
    variant = inst.variant
    deadline = time.perf_counter() + budget.time_limit
    runs = 0
    # Walk the raw DFS executions rather than the deduplicated tree stream:
    # duplicate runs rebuild the same tree, so the answer and the first
    # qualifying witness are unchanged, and the time budget can be checked
    # between runs even when duplicates vastly outnumber distinct trees.
    for root in range(n):
        for parent, order in _forced_runs(g, root):
            runs += 1
            if not (runs & 255) and time.perf_counter() > deadline:
                raise BudgetExceeded("time")
            internal = len({p for p in parent.values() if p is not None})
            leaves = n - internal
            if variant is Variant.MIN_LLT:
                hit = leaves <= k
            elif variant is Variant.MAX_LLT:
                hit = leaves >= k
            elif variant is Variant.DUAL_MIN_LLT:
                hit = internal >= k
            else:
                hit = internal <= k
            if hit:
                return Decision(True, witness=RootedSpanningTree(root, dict(parent), tuple(order)))
    return Decision(False)
