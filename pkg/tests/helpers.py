"""Shared test fixtures: small graph builders, brute-force oracles, corpora.

The oracles here are deliberately independent of the library paths they
check (plain subset enumeration, union-find connectivity, networkx for
cross-checks).
"""
from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from lineal import Graph, internal_profile
from lineal.generate import gnp_graph


def graph(n, edges):
    return Graph(n, edges)


P3 = Graph(3, [(0, 1), (1, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])  # K_{1,3}, center 0
STAR5 = Graph(6, [(0, i) for i in range(1, 6)])  # K_{1,5}, center 0
PAW = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])  # triangle plus pendant on 0


# ---------------------------------------------------------------------------
# Brute-force oracles.

def bf_is_connected(g: Graph) -> bool:
    """Union-find connectivity, independent of the library's BFS."""
    if g.vertex_count <= 1:
        return True
    par = list(range(g.vertex_count))

    def find(x):
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    for u, v in g.edges():
        par[find(u)] = find(v)
    roots = {find(v) for v in range(g.vertex_count)}
    return len(roots) == 1


def is_vertex_cover(g: Graph, s) -> bool:
    ss = set(s)
    return all(u in ss or v in ss for u, v in g.edges())


def bf_min_cover(g: Graph) -> frozenset[int]:
    """Smallest vertex cover by ascending subset size (fine up to n ~ 12)."""
    verts = range(g.vertex_count)
    for size in range(g.vertex_count + 1):
        for cand in combinations(verts, size):
            if is_vertex_cover(g, cand):
                return frozenset(cand)
    raise AssertionError("unreachable")


def bf_minimal_covers(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers (subset enumeration, n <= 10 or so)."""
    n = g.vertex_count
    out = []
    for mask in range(1 << n):
        s = {v for v in range(n) if mask >> v & 1}
        if not is_vertex_cover(g, s):
            continue
        if any(is_vertex_cover(g, s - {v}) for v in s):
            continue
        out.append(frozenset(s))
    return out


def all_partial_trees(g: Graph):
    """Every rooted subtree of g: a connected vertex subset, a spanning tree
    of its induced subgraph, and a choice of root."""
    from lineal import RootedSpanningTree

    n = g.vertex_count
    all_edges = list(g.edges())
    for r in range(1, n + 1):
        for subset in combinations(range(n), r):
            sub = set(subset)
            if r == 1:
                yield RootedSpanningTree(subset[0], {subset[0]: None})
                continue
            inner = [(u, v) for u, v in all_edges if u in sub and v in sub]
            if len(inner) < r - 1:
                continue
            for tree_edges in combinations(inner, r - 1):
                par = {v: v for v in sub}

                def find(x):
                    while par[x] != x:
                        par[x] = par[par[x]]
                        x = par[x]
                    return x

                ok = True
                for u, v in tree_edges:
                    ru, rv = find(u), find(v)
                    if ru == rv:
                        ok = False
                        break
                    par[ru] = rv
                if not ok:
                    continue
                adj = {v: [] for v in sub}
                for u, v in tree_edges:
                    adj[u].append(v)
                    adj[v].append(u)
                for root in subset:
                    parent = {root: None}
                    stack = [root]
                    while stack:
                        x = stack.pop()
                        for y in adj[x]:
                            if y not in parent:
                                parent[y] = x
                                stack.append(y)
                    yield RootedSpanningTree(root, parent)


# ---------------------------------------------------------------------------
# Corpora.

_atlas_cache: dict[int, list[Graph]] = {}


def atlas_connected(max_n: int = 6) -> list[Graph]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    if max_n not in _atlas_cache:
        import networkx as nx
        from networkx.generators.atlas import graph_atlas_g

        out = []
        for G in graph_atlas_g():
            n = G.number_of_nodes()
            if n < 1 or n > max_n:
                continue
            if n > 1 and not nx.is_connected(G):
                continue
            out.append(Graph(n, [tuple(e) for e in G.edges()]))
        _atlas_cache[max_n] = out
    return _atlas_cache[max_n]


def random_connected(ns, per_n: int, seed0: int = 20240) -> list[Graph]:
    """Seeded connected G(n, p) samples, alternating sparse and denser."""
    out = []
    for n in ns:
        for i in range(per_n):
            p = 0.3 if i % 2 == 0 else 0.45
            out.append(gnp_graph(n, p, seed=seed0 + 1000 * n + i))
    return out


_profile_cache: dict[Graph, frozenset[int]] = {}


def profile_of(g: Graph, limit: int = 10) -> frozenset[int]:
    got = _profile_cache.get(g)
    if got is None:
        got = internal_profile(g, limit=limit)
        _profile_cache[g] = got
    return got


# ---------------------------------------------------------------------------
# Hypothesis strategy: connected graphs built around a random spanning tree.

@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    for flag, (u, v) in zip(extra, combinations(range(n), 2)):
        if flag:
            edges.add((u, v))
    return Graph(n, sorted(edges))
