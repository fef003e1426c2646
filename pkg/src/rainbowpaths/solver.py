"""Exact c_k / cp_k by canonical set-partition search, plus boring-vertex recoloring."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .exceptions import DomainError, ResourceError
from .graphcore import (
    Coloring,
    Graph,
    _k_of,
    as_tree,
    bipartition,
    has_rainbow_path,
    is_proper,
    iter_paths,
)

MAX_N = 14
MAX_N_PROPER_TREE = 16


@dataclass
class SolveResult:
    """Optimum of a solve; ``value is None`` means no valid coloring exists."""

    value: int | None
    witness: Coloring | None
    k: int
    proper: bool
    optimal_count: int | None = None
    nodes: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def defined(self) -> bool:
        return self.value is not None

    def __int__(self):
        if self.value is None:
            raise DomainError("optimum is undefined")
        return self.value


def is_valid_coloring(g: Graph, c: Coloring, k: int, proper: bool = False) -> bool:
    return (not proper or is_proper(g, c)) and not has_rainbow_path(g, c, k)


def branching_order(g: Graph) -> list[int]:
    """Vertices by descending degree (ties by id), each next vertex adjacent to
    the already-ordered prefix whenever possible.

    Pure descending-degree order scatters the prefix across the graph, so the
    rainbow test on completed paths fires late; growing a connected prefix from
    the highest-degree vertex keeps the degree priority while closing paths early.
    """
    n = g.n
    placed = [False] * n
    order: list[int] = []
    key = lambda v: (-g.degree(v), v)  # noqa: E731
    for s in sorted(range(n), key=key):
        if placed[s]:
            continue
        placed[s] = True
        order.append(s)
        frontier = set(w for w in g.adj[s] if not placed[w])
        while frontier:
            v = min(frontier, key=key)
            frontier.discard(v)
            placed[v] = True
            order.append(v)
            frontier.update(w for w in g.adj[v] if not placed[w])
    return order


class _Search:
    """Restricted-growth partition search in a fixed branching order.

    All vertices are handled by their position in the order. For each position
    we keep the k-paths whose last vertex (in order) sits there; when such a
    path is still rainbow on its other k-1 vertices, the vertex must reuse one
    of those colors.
    """

    def __init__(self, g: Graph, k: int, proper: bool, order: list[int] | None = None):
        self.g, self.k, self.proper = g, k, proper
        n = g.n
        self.order = list(order) if order is not None else branching_order(g)
        if sorted(self.order) != list(range(n)):
            raise DomainError("branching order must be a permutation of the vertices")
        pos = [0] * n
        for i, v in enumerate(self.order):
            pos[v] = i
        closing: list[set[tuple[int, ...]]] = [set() for _ in range(n)]
        vertex_sets = set()
        for p in iter_paths(g, k):
            q = tuple(sorted(pos[v] for v in p))
            vertex_sets.add(q)
            closing[q[-1]].add(q[:-1])
        self.closing = [sorted(c) for c in closing]
        self.before = [tuple(sorted(pos[w] for w in g.adj[self.order[i]] if pos[w] < i)) for i in range(n)]
        self.pack = self._suffix_packing(n, vertex_sets)
        self.nodes = 0

    @staticmethod
    def _suffix_packing(n: int, sets) -> list[int]:
        # greedy disjoint packing of k-paths inside positions i..n-1; each such
        # path needs a repeated color among its own vertices
        by_min = sorted(sets, key=lambda q: (q[-1], q))
        pack = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            used = 0
            count = 0
            for q in by_min:
                if q[0] < i:
                    continue
                mask = 0
                for x in q:
                    mask |= 1 << x
                if not mask & used:
                    used |= mask
                    count += 1
            pack[i] = count
        return pack

    def _allowed(self, i: int, col: list[int]):
        """Colors position `i` may reuse, or None if a fresh color is also fine."""
        allowed = None
        km1 = self.k - 1
        for p in self.closing[i]:
            s = {col[j] for j in p}
            if len(s) == km1:
                if allowed is None:
                    allowed = s
                else:
                    allowed = allowed & s
                    if not allowed:
                        return allowed
        return allowed

    def maximize(self, lower: int = 0, seed: list[int] | None = None):
        """Best color count strictly above `lower` (or `lower` with `seed`)."""
        n = self.g.n
        col = [0] * n
        best = [lower, seed]
        pack, before, proper = self.pack, self.before, self.proper

        def dfs(i: int, m: int):
            self.nodes += 1
            if m + (n - i) - pack[i] <= best[0]:
                return
            if i == n:
                best[0] = m
                best[1] = col[:]
                return
            allowed = self._allowed(i, col)
            if allowed is not None and not allowed:
                return
            banned = {col[j] for j in before[i]} if proper else ()
            if allowed is None:
                col[i] = m
                dfs(i + 1, m + 1)
                cands = range(m - 1, -1, -1)
            else:
                cands = sorted(allowed, reverse=True)
            for c in cands:
                if c not in banned:
                    col[i] = c
                    dfs(i + 1, m)
                    if m + (n - i) - pack[i] <= best[0]:
                        return

        if n == 0:
            return 0, []
        dfs(0, 0)
        return best[0], best[1]

    def enumerate(self, exactly: int) -> Iterator[list[int]]:
        """Every valid restricted-growth string with exactly `exactly` colors."""
        n = self.g.n
        col = [0] * n
        pack, before, proper = self.pack, self.before, self.proper

        def dfs(i: int, m: int):
            self.nodes += 1
            if m > exactly or m + (n - i) - pack[i] < exactly:
                return
            if i == n:
                yield col[:]
                return
            allowed = self._allowed(i, col)
            if allowed is not None and not allowed:
                return
            banned = {col[j] for j in before[i]} if proper else ()
            cands = range(m) if allowed is None else sorted(allowed)
            for c in cands:
                if c not in banned:
                    col[i] = c
                    yield from dfs(i + 1, m)
            if allowed is None and m < exactly:
                col[i] = m
                yield from dfs(i + 1, m + 1)

        if n == 0:
            if exactly == 0:
                yield []
            return
        yield from dfs(0, 0)

    def to_coloring(self, col: list[int]) -> Coloring:
        labels = [0] * self.g.n
        for i, v in enumerate(self.order):
            labels[v] = col[i]
        return Coloring(labels)


def _guard(g: Graph, proper: bool, max_n: int | None):
    if max_n is None:
        max_n = MAX_N_PROPER_TREE if proper and g.is_tree() else MAX_N
    if g.n > max_n:
        raise ResourceError(f"exact search limited to n <= {max_n} (got n={g.n}); raise max_n to override")


def _seed(g: Graph, k: int, proper: bool) -> Coloring | None:
    """A cheap valid coloring to start the bound from."""
    if not proper:
        # a coloring with one color is never rainbow on k >= 2 vertices
        base = Coloring([0] * g.n)
    else:
        base = None
    if k >= 4 and g.n >= 2:
        parts = bipartition(g)
        if parts is not None:
            x, _ = parts
            big = sorted(x)
            labels = [0] * g.n
            for i, v in enumerate(big, 1):
                labels[v] = i
            c = Coloring(labels)
            if is_valid_coloring(g, c, k, proper) and (base is None or c.color_count > base.color_count):
                base = c
    if base is not None and not is_valid_coloring(g, base, k, proper):
        base = None
    return base


def _solve(g: Graph, k: int, proper: bool, max_n: int | None, count: bool, order=None) -> SolveResult:
    k = _k_of(k)
    if proper and k < 3:
        raise DomainError("proper colorings need k >= 3")
    _guard(g, proper, max_n)
    search = _Search(g, k, proper, order)
    seed = _seed(g, k, proper)
    if seed is None:
        value, col = search.maximize(lower=0)
        witness = search.to_coloring(col) if col is not None and value > 0 else None
    else:
        value, col = search.maximize(lower=seed.color_count)
        witness = search.to_coloring(col) if col is not None else seed
    if witness is None:
        if g.n == 0:
            return SolveResult(0, Coloring([]), k, proper, 1 if count else None, search.nodes)
        return SolveResult(None, None, k, proper, None, search.nodes)
    res = SolveResult(value, witness, k, proper, nodes=search.nodes)
    if count:
        res.optimal_count = sum(1 for _ in search.enumerate(value))
        res.nodes = search.nodes
    return res


def exact_c_k(g: Graph, k: int, *, max_n: int | None = None, count: bool = False) -> SolveResult:
    """Maximum colors in a coloring of `g` with no rainbow path on k vertices."""
    return _solve(g, k, False, max_n, count)


def exact_cp_k(g: Graph, k: int, *, max_n: int | None = None, count: bool = False) -> SolveResult:
    """Like `exact_c_k` over proper colorings; ``value`` is None when none exist."""
    return _solve(g, k, True, max_n, count)


def solve(g: Graph, k: int, proper: bool = False, **kw) -> SolveResult:
    return exact_cp_k(g, k, **kw) if proper else exact_c_k(g, k, **kw)


def count_optimal_partitions(g: Graph, k: int, proper: bool = False, *, max_n: int | None = None) -> int:
    res = _solve(g, k, proper, max_n, count=True)
    if res.value is None:
        raise DomainError("optimum undefined: no valid coloring exists")
    return res.optimal_count


def enumerate_valid_colorings(
    g: Graph, k: int, proper: bool = False, exactly: int | None = None, *, max_n: int | None = None
) -> Iterator[Coloring]:
    """All valid partitions with exactly `exactly` colors, in restricted-growth order."""
    k = _k_of(k)
    _guard(g, proper, max_n)
    if exactly is None:
        raise DomainError("enumerate_valid_colorings needs the exact color count")
    search = _Search(g, k, proper, order=list(range(g.n)))
    for col in search.enumerate(exactly):
        yield Coloring(col)


# --------------------------------------------------------------------------
# boring vertices


def _distance_two(t: Graph, v: int) -> list[int]:
    out = set()
    for w in t.adj[v]:
        out.update(t.adj[w])
    out.discard(v)
    return sorted(out - set(t.adj[v]))


def is_boring(t: Graph, c: Coloring, v: int) -> bool:
    """All neighbors share a color, or all vertices at distance 2 share v's color."""
    if len({c[w] for w in t.adj[v]}) <= 1:
        return True
    return all(c[y] == c[v] for y in _distance_two(t, v))


def _branch(t: Graph, root: int, start: int) -> list[int]:
    """Vertices whose path to `root` passes through `start` (tree only)."""
    seen = {root, start}
    out = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in t.adj[x]:
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def make_boring(t: Graph, c: Coloring, k: int = 4) -> Coloring:
    """Recolor a proper rainbow-P_4-free tree coloring so every vertex is boring.

    Repeats the subtree color swap around the smallest non-boring vertex: with
    x1 - x2 - x3 colored 1, 2, 3, each branch hanging off a distance-2 vertex y
    of x3 swaps colors 1 and 3 (when y has color 1) or 2 and 3 (when y has
    color 2). The color count never changes.
    """
    if k != 4:
        raise DomainError("boring recoloring is only established for k = 4")
    t = as_tree(t)
    if not is_valid_coloring(t, c, 4, proper=True):
        raise DomainError("input must be a proper coloring with no rainbow P_4")
    col = list(c.colors)
    for _ in range(t.n + 1):
        cur = Coloring(col)
        bad = [v for v in range(t.n) if not is_boring(t, cur, v)]
        if not bad:
            return cur
        x3 = bad[0]
        x1 = x2 = None
        for w in t.adj[x3]:
            for y in t.adj[w]:
                if y != x3 and col[y] != col[x3]:
                    x1, x2 = y, w
                    break
            if x1 is not None:
                break
        one, two, three = col[x1], col[x2], col[x3]
        swap = {one: {one: three, three: one}, two: {two: three, three: two}}
        for w in t.adj[x3]:
            for y in t.adj[w]:
                if y == x3 or col[y] not in swap:
                    continue
                table = swap[col[y]]
                for z in _branch(t, w, y):
                    col[z] = table.get(col[z], col[z])
        before = len(bad)
        after = sum(not is_boring(t, Coloring(col), v) for v in range(t.n))
        if after >= before:
            raise RuntimeError(f"recoloring around vertex {x3} did not reduce non-boring vertices")
    raise RuntimeError("boring recoloring did not reach a fixpoint")
