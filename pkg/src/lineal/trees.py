"""Rooted spanning trees, DFS-tree predicates, and the exhaustive tree oracle.

A rooted spanning tree T of a graph G is a DFS tree iff every edge of G not
in T joins an ancestor-descendant pair of T. The predicates here also cover
partial trees (covering a subset of V(G)), which is what the tuple-guessing
solvers extend to full trees.

Everything in this module is a pure function of immutable inputs; the
enumeration generators are single-consumer but independent enumerations may
run concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graphs import Graph, components_outside

#: Largest graph the exhaustive enumeration accepts unless told otherwise.
ORACLE_LIMIT_DEFAULT = 10


class OracleLimitError(RuntimeError):
    """Raised when exhaustive enumeration is asked for a graph above the size limit."""


class InvalidTreeError(ValueError):
    """Raised when a claimed tree is structurally broken or does not fit its graph."""


@dataclass(slots=True)
class RootedSpanningTree:
    """Rooted tree as a parent map over the vertices it covers.

    ``parent[root] is None``; every other covered vertex maps to its parent.
    The covered set may be a proper subset of the host graph's vertices
    (a partial tree). ``order`` records one discovery order that produces
    the tree; it is provenance only and does not take part in equality.
    """

    root: int
    parent: dict[int, int | None]
    order: tuple[int, ...] | None = field(default=None, compare=False)

    def covered(self):
        """View of the covered vertex set."""
        return self.parent.keys()

    def children_map(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.parent}
        for v, p in self.parent.items():
            if p is not None:
                kids[p].append(v)
        for lst in kids.values():
            lst.sort()
        return kids

    def internal_vertices(self) -> frozenset[int]:
        """Covered vertices with at least one child.

        A one-vertex tree has no internal vertices: a root without
        descendants is a leaf.
        """
        return frozenset(p for p in self.parent.values() if p is not None)

    def leaf_vertices(self) -> frozenset[int]:
        return frozenset(self.parent.keys() - self.internal_vertices())

    def internal_count(self) -> int:
        return len(self.internal_vertices())

    def discovery_order(self) -> tuple[int, ...]:
        """Stored discovery order, or a canonical one replayed over the tree.

        The replay walks the tree from the root, always descending into the
        smallest-id unvisited child.
        """
        if self.order is not None:
            return self.order
        kids = self.children_map()
        order = [self.root]
        stack = [(self.root, iter(kids[self.root]))]
        while stack:
            v, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                continue
            order.append(child)
            stack.append((child, iter(kids[child])))
        return tuple(order)


def internal_vertices(t: RootedSpanningTree) -> frozenset[int]:
    return t.internal_vertices()


class AncestorIndex:
    """Enter/exit timestamps of one tree traversal, giving O(1) ancestor tests."""

    __slots__ = ("enter", "exit")

    def __init__(self, enter: dict[int, int], exit_: dict[int, int]):
        self.enter = enter
        self.exit = exit_

    @classmethod
    def build(cls, t: RootedSpanningTree) -> "AncestorIndex":
        """Timestamp every covered vertex; rejects parent maps that are not a single tree."""
        if t.root not in t.parent or t.parent[t.root] is not None:
            raise InvalidTreeError("root must be covered with no parent")
        kids: dict[int, list[int]] = {v: [] for v in t.parent}
        for v, p in t.parent.items():
            if p is None:
                if v != t.root:
                    raise InvalidTreeError(f"vertex {v} has no parent but is not the root")
                continue
            if p not in t.parent:
                raise InvalidTreeError(f"parent {p} of {v} is not covered")
            kids[p].append(v)
        enter: dict[int, int] = {}
        exit_: dict[int, int] = {}
        clock = 0
        stack: list[tuple[int, Iterator[int]]] = [(t.root, iter(kids[t.root]))]
        enter[t.root] = clock
        clock += 1
        while stack:
            v, it = stack[-1]
            child = next(it, None)
            if child is None:
                exit_[v] = clock
                clock += 1
                stack.pop()
                continue
            enter[child] = clock
            clock += 1
            stack.append((child, iter(kids[child])))
        if len(enter) != len(t.parent):
            raise InvalidTreeError("parent links contain a cycle or a second component")
        return cls(enter, exit_)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u is an ancestor of v; every vertex is its own ancestor."""
        return self.enter[u] <= self.enter[v] and self.exit[v] <= self.exit[u]

    def is_chain(self, vertices: Iterable[int]) -> bool:
        """True iff the vertices are pairwise comparable, i.e. lie on one root-to-leaf path."""
        vs = sorted(vertices, key=self.enter.__getitem__)
        for a, b in zip(vs, vs[1:]):
            if self.exit[b] > self.exit[a]:
                return False
        return True

    def deepest(self, vertices: Iterable[int]) -> int:
        """Deepest member of a chain (the one entered last)."""
        return max(vertices, key=self.enter.__getitem__)


def dfs_tree_violation(
    g: Graph, t: RootedSpanningTree, index: AncestorIndex | None = None
) -> tuple[int, int] | None:
    """First edge of G inside t's covered set joining incomparable non-adjacent-in-T vertices.

    Returns None when t is a DFS tree of the subgraph induced on its covered
    set. Raises InvalidTreeError when t is not a tree over G's edges at all.
    """
    idx = index if index is not None else AncestorIndex.build(t)
    cov = t.parent
    for v, p in t.parent.items():
        if p is not None and not g.adjacent(v, p):
            raise InvalidTreeError(f"tree edge ({p}, {v}) is not an edge of the graph")
    for u in sorted(cov):
        pu = t.parent[u]
        for w in g.adjacency[u]:
            if w <= u or w not in cov:
                continue
            if pu == w or t.parent[w] == u:
                continue
            if not (idx.is_ancestor(u, w) or idx.is_ancestor(w, u)):
                return (u, w)
    return None


def is_dfs_tree(g: Graph, t: RootedSpanningTree) -> bool:
    """True iff the spanning tree t is a DFS tree of g.

    Raises InvalidTreeError when t does not span g or is not a tree of g.
    """
    if len(t.parent) != g.vertex_count or any(
        not (0 <= v < g.vertex_count) for v in t.parent
    ):
        raise InvalidTreeError("tree does not span the graph")
    return dfs_tree_violation(g, t) is None


def tree_respecting_ordering(
    g: Graph, ordering: Iterable[int]
) -> RootedSpanningTree | None:
    """The unique DFS tree discovered exactly in `ordering`, or None if there is none.

    Operates on the subgraph induced by the ordering's vertex set. Simulates
    the only possible DFS run: the stack pops while its top has no
    undiscovered neighbor inside the set, and the next vertex must attach to
    the surviving top. Linear in vertices plus edges.
    """
    order = tuple(ordering)
    if not order:
        raise ValueError("ordering must be nonempty")
    members = set(order)
    if len(members) != len(order):
        raise ValueError("ordering has repeated vertices")
    for v in order:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    root = order[0]
    parent: dict[int, int | None] = {root: None}
    stack = [root]
    adj = g.adjacency
    scan = {}  # per-vertex resume position into its adjacency list
    for w in order[1:]:
        while stack:
            v = stack[-1]
            av = adj[v]
            i = scan.get(v, 0)
            while i < len(av) and (av[i] in parent or av[i] not in members):
                i += 1
            scan[v] = i
            if i < len(av):
                break
            stack.pop()
        if not stack or not g.adjacent(stack[-1], w):
            return None
        parent[w] = stack[-1]
        stack.append(w)
    return RootedSpanningTree(root, parent, order)


def dfs_any(g: Graph, root: int) -> RootedSpanningTree:
    """The DFS tree from `root` exploring neighbors in ascending id order."""
    if not (0 <= root < g.vertex_count):
        raise ValueError(f"root {root} out of range")
    parent: dict[int, int | None] = {root: None}
    order = [root]
    adj = g.adjacency
    stack = [[root, 0]]
    while stack:
        v, i = stack[-1]
        av = adj[v]
        while i < len(av) and av[i] in parent:
            i += 1
        if i == len(av):
            stack.pop()
            continue
        stack[-1][1] = i + 1
        w = av[i]
        parent[w] = v
        order.append(w)
        stack.append([w, 0])
    if len(parent) != g.vertex_count:
        raise ValueError("graph is disconnected; DFS covers only one component")
    return RootedSpanningTree(root, parent, tuple(order))


# ---------------------------------------------------------------------------
# Extendability of partial trees.

def _components_chain_ok(g: Graph, t: RootedSpanningTree, idx: AncestorIndex) -> bool:
    """Each component outside t must see only one root-to-leaf path of t."""
    inside = t.parent
    for comp in components_outside(g, inside):
        boundary = {u for w in comp for u in g.adjacency[w] if u in inside}
        if not idx.is_chain(boundary):
            return False
    return True


def _leaves_have_outside_neighbor(g: Graph, t: RootedSpanningTree) -> bool:
    inside = t.parent
    for v in t.leaf_vertices():
        if all(u in inside for u in g.adjacency[v]):
            return False
    return True


def _outside_is_independent_with_chains(
    g: Graph, t: RootedSpanningTree, idx: AncestorIndex
) -> bool:
    """Every uncovered vertex must be adjacent only to covered vertices on one path."""
    inside = t.parent
    for v in range(g.vertex_count):
        if v in inside:
            continue
        nbrs = g.adjacency[v]
        if any(u not in inside for u in nbrs):
            return False
        if not idx.is_chain(nbrs):
            return False
    return True


def extendable(g: Graph, t: RootedSpanningTree) -> bool:
    """Can t grow into a DFS tree of g with the same root?

    Holds iff t is a DFS tree of the subgraph induced on its covered set and
    the neighborhood of every outside component lies on one root-to-leaf
    path of t.
    """
    idx = AncestorIndex.build(t)
    if dfs_tree_violation(g, t, idx) is not None:
        return False
    return _components_chain_ok(g, t, idx)


def extendable_all_internal(g: Graph, t: RootedSpanningTree) -> bool:
    """Can t grow into a DFS tree in which every covered vertex is internal?

    Adds to `extendable` the requirement that every leaf of t has a neighbor
    outside the covered set (something must eventually hang below it).
    """
    idx = AncestorIndex.build(t)
    if dfs_tree_violation(g, t, idx) is not None:
        return False
    if not _leaves_have_outside_neighbor(g, t):
        return False
    return _components_chain_ok(g, t, idx)


def extendable_all_leaves(g: Graph, t: RootedSpanningTree) -> bool:
    """Can t grow into a DFS tree in which every uncovered vertex is a leaf?

    Requires the uncovered set to be independent and each uncovered vertex's
    neighborhood to lie on one root-to-leaf path of t.
    """
    idx = AncestorIndex.build(t)
    if dfs_tree_violation(g, t, idx) is not None:
        return False
    return _outside_is_independent_with_chains(g, t, idx)


# ---------------------------------------------------------------------------
# Exhaustive enumeration oracle.

def _forced_runs(g: Graph, root: int):
    """Every complete DFS execution from `root`, one per discovery order.

    Yields the live (parent, order) state; consumers must copy what they
    keep. Distinct runs can build the same tree, so callers wanting distinct
    trees must deduplicate.
    """
    n = g.vertex_count
    adj = g.adjacency
    parent: dict[int, int | None] = {root: None}
    order = [root]
    stack = [root]

    def descend():
        if len(order) == n:
            yield parent, order
            return
        i = len(stack) - 1
        cand: list[int] = []
        while i >= 0:
            cand = [w for w in adj[stack[i]] if w not in parent]
            if cand:
                break
            i -= 1
        if i < 0:
            return
        saved = stack[i + 1 :]
        del stack[i + 1 :]
        top = stack[-1]
        for w in cand:
            parent[w] = top
            order.append(w)
            stack.append(w)
            yield from descend()
            stack.pop()
            order.pop()
            del parent[w]
        stack.extend(saved)

    yield from descend()


def enumerate_dfs_trees(
    g: Graph, *, limit: int = ORACLE_LIMIT_DEFAULT
) -> Iterator[RootedSpanningTree]:
    """Every DFS tree of g over every root, each (root, parent map) exactly once.

    Branches over all neighbor-exploration orders and deduplicates, since
    different orders can produce identical trees. Refuses graphs larger than
    `limit` vertices rather than running for hours.
    """
    if g.vertex_count > limit:
        raise OracleLimitError(
            f"graph has {g.vertex_count} vertices, oracle limit is {limit}"
        )

    def gen():
        n = g.vertex_count
        for root in range(n):
            seen: set[tuple[int, ...]] = set()
            for parent, order in _forced_runs(g, root):
                key = tuple(parent[v] if parent[v] is not None else -1 for v in range(n))
                if key in seen:
                    continue
                seen.add(key)
                yield RootedSpanningTree(root, dict(parent), tuple(order))

    return gen()


def internal_profile(g: Graph, *, limit: int = ORACLE_LIMIT_DEFAULT) -> frozenset[int]:
    """The set of internal-vertex counts realized by DFS trees of g.

    Ground truth for checking that reductions preserve achievable counts
    exactly. Subject to the same size limit as enumerate_dfs_trees.
    """
    if g.vertex_count > limit:
        raise OracleLimitError(
            f"graph has {g.vertex_count} vertices, oracle limit is {limit}"
        )
    out: set[int] = set()
    for root in range(g.vertex_count):
        for parent, _ in _forced_runs(g, root):
            out.add(len({p for p in parent.values() if p is not None}))
    return frozenset(out)
