"""Non-isomorphic free trees and small connected cubic graphs."""
from __future__ import annotations

from typing import Iterator

import networkx as nx

from .exceptions import DomainError, ResourceError
from .graphcore import Graph, Tree, parse_graph6

MAX_TREE_ORDER = 16
MAX_CUBIC_ORDER = 14
MAX_NATIVE_CUBIC_ORDER = 10


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    # successor of a rooted level sequence (root at level 0), WROM style
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    # first principal subtree (levels shifted up) and the rest with the root
    m = len(seq)
    ones = 0
    for i, x in enumerate(seq):
        if x == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(seq: list[int]) -> list[int] | None:
    # advance to the next level sequence that is the canonical one of its free tree
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def _levels_to_tree(seq: list[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for v, lev in enumerate(seq):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(seq), frozenset(edges))


def all_trees(n: int, *, max_n: int = MAX_TREE_ORDER) -> Iterator[Tree]:
    """Every free tree of order `n` exactly once, in a fixed order.

    Vertex 0 is the root of the generated level sequence; vertices are numbered
    in preorder.
    """
    if n < 1:
        raise DomainError(f"tree order must be >= 1, got {n}")
    if n > max_n:
        raise ResourceError(f"tree enumeration limited to n <= {max_n}")
    if n == 1:
        yield Tree(1, frozenset())
        return
    if n == 2:
        yield Tree(2, frozenset({(0, 1)}))
        return
    # start from the path rooted at its center
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield _levels_to_tree(seq)
            seq = _next_rooted(seq)


def count_trees(n: int) -> int:
    return sum(1 for _ in all_trees(n))


# --------------------------------------------------------------------------
# canonical form


def tree_centers(t: Graph) -> list[int]:
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = [t.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int) -> list[int]:
    # level sequence with children ordered so the whole sequence is
    # lexicographically maximal
    def code(v: int, parent: int, depth: int) -> list[int]:
        kids = sorted((code(w, v, depth + 1) for w in t.adj[v] if w != parent), reverse=True)
        out = [depth]
        for c in kids:
            out.extend(c)
        return out

    return code(root, -1, 0)


def canonical_form(t: Graph) -> str:
    """Isomorphism-invariant string for a tree: its center-rooted canonical level sequence.

    For bicentral trees the larger of the two center rootings is used.
    """
    if not t.is_tree():
        raise DomainError("canonical_form expects a tree")
    best = max(_rooted_code(t, c) for c in tree_centers(t))
    return ".".join(map(str, best)) if len(best) > 1 else "0"


def tree_from_canonical(code: str) -> Tree:
    return _levels_to_tree([int(x) for x in code.split(".")])


# --------------------------------------------------------------------------
# cubic graphs


def _cubic_labelled(n: int) -> Iterator[Graph]:
    # adjacency filled vertex by vertex with increasing neighbor labels; among
    # untouched vertices only the smallest may be used, which cuts most of the
    # relabelled copies
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    nbr = [set() for _ in range(n)]

    def fill(v: int, start: int) -> Iterator[Graph]:
        if v == n:
            g = Graph(n, frozenset(edges))
            if g.is_connected():
                yield g
            return
        if deg[v] == 3:
            yield from fill(v + 1, v + 2)
            return
        fresh = next((w for w in range(v + 1, n) if deg[w] == 0), None)
        for w in range(max(start, v + 1), n):
            if deg[w] == 3 or w in nbr[v]:
                continue
            if deg[w] == 0 and w != fresh:
                continue
            deg[v] += 1
            deg[w] += 1
            nbr[v].add(w)
            nbr[w].add(v)
            edges.append((v, w))
            yield from fill(v, w + 1)
            edges.pop()
            nbr[v].discard(w)
            nbr[w].discard(v)
            deg[v] -= 1
            deg[w] -= 1

    yield from fill(0, 1)


def all_cubic_graphs(n: int, *, source: str | None = None) -> Iterator[Graph]:
    """Connected 3-regular graphs of order `n`, one per isomorphism class.

    Orders above 10 need `source`, a graph6 file from an external generator
    (for example ``geng -c -d3 -D3 n``); its graphs are checked for being
    connected and cubic, and deduplicated.
    """
    if n % 2:
        raise DomainError(f"cubic graphs need even order, got {n}")
    if n > MAX_CUBIC_ORDER:
        raise ResourceError(f"cubic enumeration limited to n <= {MAX_CUBIC_ORDER}")
    if n < 4:
        return
    if source is not None:
        candidates = (g for g in read_graph6_file(source) if g.n == n)
    elif n <= MAX_NATIVE_CUBIC_ORDER:
        candidates = _cubic_labelled(n)
    else:
        raise ResourceError(f"native cubic generation limited to n <= {MAX_NATIVE_CUBIC_ORDER}; pass a graph6 source")

    buckets: dict[str, list[tuple[Graph, object]]] = {}
    found: list[Graph] = []
    for g in candidates:
        if any(g.degree(v) != 3 for v in range(n)) or not g.is_connected():
            continue
        h = nx.Graph(list(g.edges))
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for _, other in bucket):
            continue
        bucket.append((g, h))
        found.append(g)
    yield from sorted(found, key=lambda g: g.sorted_edges)


def read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield parse_graph6(line)
