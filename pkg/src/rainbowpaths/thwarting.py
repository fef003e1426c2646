"""P_k-thwarting sets: tree DP, brute-force oracle, and the coloring they induce."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .exceptions import DomainError, ResourceError
from .graphcore import Coloring, Edge, Graph, _k_of, _norm_edge, as_tree, connected_components, has_path

INF = float("inf")
MAX_BRUTE_EDGES = 24


@dataclass(frozen=True)
class ThwartingSet:
    k: int
    edges: frozenset[Edge]

    def is_valid_for(self, g: Graph) -> bool:
        return self.edges <= g.edges and not has_path(g, self.k, self.edges)

    def to_json_list(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.edges)]


@dataclass(frozen=True)
class ThetaResult:
    value: int
    witness: ThwartingSet


def _make_set(k: int, edges: Iterable[Edge]) -> ThwartingSet:
    return ThwartingSet(k, frozenset(_norm_edge(*e) for e in edges))


def _rooted(t: Graph, root: int = 0):
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for v in order:
        for w in t.adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    children = [[w for w in t.adj[v] if w != parent[v]] for v in range(t.n)]
    return order, children


def _tree_dp(t: Graph, k: int, root: int = 0, keep: frozenset = frozenset(), cut: frozenset = frozenset()):
    """Minimum thwarting set of a tree with some edges forced in (`cut`) or out (`keep`).

    ``best[v][h]`` is the fewest cuts inside v's subtree when the longest
    downward path from v in its remaining component has h edges. A path
    through v joins its two tallest branches, so kept branches must satisfy
    ``h + d <= k - 2`` against the tallest branch kept so far.
    Returns ``(value, edges)`` or ``(inf, None)``.
    """
    H = k - 1  # heights 0..k-2
    order, children = _rooted(t, root)
    best: list[list[float]] = [[]] * t.n
    # trace[v][j][h] = (prev_h, kept, child_h) after merging child j of v
    trace: list[list[list]] = [[] for _ in range(t.n)]
    for v in reversed(order):
        f = [0] + [INF] * (H - 1)
        for c in children[v]:
            e = _norm_edge(v, c)
            bc = best[c]
            g = [INF] * H
            tr = [None] * H
            if e not in cut:
                for hc in range(H):
                    if bc[hc] == INF:
                        continue
                    d = hc + 1
                    for h in range(H):
                        if f[h] == INF or h + d > k - 2:
                            continue
                        nh = max(h, d)
                        cost = f[h] + bc[hc]
                        if cost < g[nh]:
                            g[nh] = cost
                            tr[nh] = (h, True, hc)
            if e not in keep:
                cmin = min(bc)
                if cmin < INF:
                    chc = bc.index(cmin)
                    for h in range(H):
                        if f[h] == INF:
                            continue
                        cost = f[h] + 1 + cmin
                        if cost < g[h]:
                            g[h] = cost
                            tr[h] = (h, False, chc)
            f = g
            trace[v].append(tr)
        best[v] = f
    total = min(best[root])
    if total == INF:
        return INF, None

    edges = []
    stack = [(root, best[root].index(total))]
    while stack:
        v, h = stack.pop()
        for j in range(len(children[v]) - 1, -1, -1):
            ph, kept, hc = trace[v][j][h]
            c = children[v][j]
            if not kept:
                edges.append(_norm_edge(v, c))
            stack.append((c, hc))
            h = ph
    return int(total), sorted(edges)


def theta_tree_dp(t: Graph, k: int, *, root: int = 0) -> ThetaResult:
    """Exact P_k-thwarting number of a tree with one minimum witness."""
    k = _k_of(k)
    t = as_tree(t)
    value, edges = _tree_dp(t, k, root)
    return ThetaResult(value, _make_set(k, edges))


def theta_bruteforce(g: Graph, k: int, *, max_edges: int = MAX_BRUTE_EDGES) -> ThetaResult:
    """Exact thwarting number of any small graph by trying edge subsets by size.

    The witness is the lexicographically smallest minimum set.
    """
    k = _k_of(k)
    if g.m > max_edges:
        raise ResourceError(f"brute-force thwarting limited to {max_edges} edges (got {g.m})")
    edges = g.sorted_edges
    for size in range(g.m + 1):
        for subset in combinations(edges, size):
            if not has_path(g, k, subset):
                return ThetaResult(size, _make_set(k, subset))
    raise AssertionError("removing every edge always destroys P_k for k >= 2")


def all_min_thwarting_sets(g: Graph, k: int, *, max_edges: int = MAX_BRUTE_EDGES) -> Iterator[ThwartingSet]:
    """Every minimum thwarting set, by brute force."""
    theta = theta_bruteforce(g, k, max_edges=max_edges).value
    for subset in combinations(g.sorted_edges, theta):
        if not has_path(g, k, subset):
            yield _make_set(k, subset)


def coloring_from_thwarting(g: Graph, f: ThwartingSet) -> Coloring:
    """One color per component of ``(V, F)``, numbered by smallest vertex.

    Every P_k then contains an edge of F, which is monochromatic.
    """
    if not f.is_valid_for(g):
        raise DomainError(f"edge set is not a P_{f.k}-thwarting set of this graph")
    labels = [0] * g.n
    for i, comp in enumerate(connected_components(g.n, f.edges)):
        for v in comp:
            labels[v] = i
    return Coloring(labels)


def _leaf_edge(t: Graph, leaf: int) -> Edge:
    if not 0 <= leaf < t.n or t.degree(leaf) != 1:
        raise DomainError(f"vertex {leaf} is not a leaf")
    return _norm_edge(leaf, t.adj[leaf][0])


def min_thwarting_avoiding_leaf_edge(t: Graph, leaf: int, k: int = 4) -> ThetaResult | None:
    """A minimum thwarting set without the leaf's edge, or None if every minimum set uses it."""
    t = as_tree(t)
    e = _leaf_edge(t, leaf)
    theta, _ = _tree_dp(t, k)
    value, edges = _tree_dp(t, k, keep=frozenset({e}))
    if value != theta:
        return None
    return ThetaResult(value, _make_set(k, edges))


def min_thwarting_containing_leaf_edge(t: Graph, leaf: int, k: int = 4) -> ThetaResult | None:
    """A minimum thwarting set that uses the leaf's edge, or None if none does."""
    t = as_tree(t)
    e = _leaf_edge(t, leaf)
    theta, _ = _tree_dp(t, k)
    value, edges = _tree_dp(t, k, cut=frozenset({e}))
    if value != theta:
        return None
    return ThetaResult(value, _make_set(k, edges))
