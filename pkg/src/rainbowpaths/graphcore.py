"""Graph and coloring data model, text formats, and the rainbow-path predicate."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .exceptions import DomainError, GraphValidationError, ParseError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"negative vertex count {self.n}")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            ne = _norm_edge(u, v)
            if ne in seen:
                raise GraphValidationError(f"duplicate edge {ne}")
            seen.add(ne)
        object.__setattr__(self, "edges", frozenset(seen))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting duplicates that a set would silently swallow."""
        seen: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def components(self) -> list[list[int]]:
        return connected_components(self.n, self.edges)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


class Tree(Graph):
    """A `Graph` that is connected with exactly ``n - 1`` edges."""

    def __post_init__(self):
        super().__post_init__()
        if not Graph.is_tree(self):
            raise DomainError(f"not a tree: n={self.n}, m={len(self.edges)}")

    @classmethod
    def of(cls, g: Graph) -> "Tree":
        if isinstance(g, Tree):
            return g
        return cls(g.n, g.edges)

    def __repr__(self):
        return f"Tree(n={self.n}, edges={list(self.sorted_edges)})"


def as_tree(g: Graph) -> Tree:
    """Return `g` viewed as a `Tree`, raising `DomainError` if it is not one."""
    return Tree.of(g)


def _rgs(labels: Sequence) -> tuple[int, ...]:
    remap: dict = {}
    out = []
    for x in labels:
        if x not in remap:
            remap[x] = len(remap)
        out.append(remap[x])
    return tuple(out)


@dataclass(frozen=True, init=False)
class Coloring:
    """Vertex coloring stored as a restricted growth string.

    Any hashable labels are accepted and renamed to ``0, 1, ...`` in order of
    first appearance, so two colorings compare equal exactly when they induce
    the same partition of the vertices.
    """

    colors: tuple[int, ...]

    def __init__(self, labels: Iterable):
        object.__setattr__(self, "colors", _rgs(list(labels)))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def color_count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.color_count)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def to_json(self) -> str:
        return json.dumps(list(self.colors))

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ParseError("coloring JSON must be an array of color ids")
        return cls(data)

    def __repr__(self):
        return f"Coloring({''.join(map(str, self.colors)) if self.color_count <= 10 else list(self.colors)})"


@dataclass(frozen=True)
class PathPattern:
    """The forbidden path, given by its number of vertices."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise DomainError(f"path pattern needs k >= 2, got {self.k!r}")


def _k_of(p: int | PathPattern) -> int:
    return p.k if isinstance(p, PathPattern) else PathPattern(p).k


def _check_total(g: Graph, c: Coloring):
    if len(c) != g.n:
        raise DomainError(f"coloring has {len(c)} entries for a graph on {g.n} vertices")


# --------------------------------------------------------------------------
# parsing and serialization


def parse_graph(text: str, format: str = "edge-list", *, return_mapping: bool = False):
    """Parse `text` as ``"edge-list"`` or ``"graph6"``.

    With ``return_mapping=True`` a ``(graph, mapping)`` pair is returned where
    ``mapping[original_label] = new_id`` (identity for graph6).
    """
    if format in ("edge-list", "edgelist", "edges"):
        g, mapping = _parse_edge_list(text)
    elif format == "graph6":
        g = parse_graph6(text)
        mapping = {i: i for i in range(g.n)}
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return (g, mapping) if return_mapping else g


def _parse_edge_list(text: str) -> tuple[Graph, dict[int, int]]:
    pairs = []
    declared_n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        directive = comment.split()
        # "# n N" declares the vertex count (keeps isolated vertices)
        if not line.strip() and len(directive) == 2 and directive[0] == "n":
            try:
                declared_n = int(directive[1])
            except ValueError:
                raise ParseError(f"bad vertex-count directive {raw.strip()!r}", line=lineno) from None
            continue
        tok = line.split()
        if not tok:
            continue
        if len(tok) != 2:
            raise ParseError(f"expected 'u v', got {line.strip()!r}", line=lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line.strip()!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", line=lineno)
        pairs.append((u, v))

    labels = sorted({x for e in pairs for x in e})
    if declared_n is not None and (not labels or labels[-1] < declared_n):
        mapping = {i: i for i in range(declared_n)}
        n = declared_n
    else:
        mapping = {x: i for i, x in enumerate(labels)}
        n = len(labels)
    return Graph.from_edges(n, [(mapping[u], mapping[v]) for u, v in pairs]), mapping


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge list: sorted ``u v`` lines with ``u < v``."""
    lines = [f"{u} {v}" for u, v in g.sorted_edges]
    covered = {x for e in g.edges for x in e}
    if len(covered) != g.n or (g.n and max(covered, default=-1) != g.n - 1):
        lines.insert(0, f"# n {g.n}")
    return "\n".join(lines) + ("\n" if lines else "")


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    if data[0] == 126:
        if len(data) > 1 and data[1] == 126:
            if len(data) < 8:
                raise ParseError("truncated graph6 size field", offset=len(data))
            n = 0
            for b in data[2:8]:
                n = (n << 6) | (b - 63)
            return n, 8
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", offset=len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    return data[0] - 63, 1


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside graph6 range", offset=i)
    n, start = _g6_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", offset=start + min(len(body), need))
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    for b in range(nbits, need * 6):
        if ((body[b // 6] - 63) >> (5 - b % 6)) & 1:
            raise ParseError("nonzero graph6 padding bits", offset=start + b // 6)
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for p in range(0, len(bits), 6):
        x = 0
        for b in bits[p:p + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    return bytes(head + body).decode("ascii")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "graph6":
        return to_graph6(g) + "\n"
    if format in ("edge-list", "edgelist", "edges"):
        return serialize_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph_file(path: str) -> Graph:
    """Read a graph file, guessing graph6 from the ``.g6`` suffix or content."""
    with open(path) as fh:
        text = fh.read()
    return parse_graph(text, guess_format(text, path))


def guess_format(text: str, path: str = "") -> str:
    if path.endswith((".g6", ".graph6")):
        return "graph6"
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(body) == 1 and len(body[0].split()) == 1 and not body[0].strip().isdigit():
        return "graph6"
    return "edge-list"


# --------------------------------------------------------------------------
# predicates


def connected_components(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    nb: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nb[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_total(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


def monochromatic_edges(g: Graph, c: Coloring) -> set[Edge]:
    _check_total(g, c)
    return {(u, v) for u, v in g.edges if c[u] == c[v]}


def has_rainbow_path(g: Graph, c: Coloring, p: int | PathPattern) -> bool:
    """True iff some simple path on k vertices has k distinct colors."""
    k = _k_of(p)
    _check_total(g, c)
    if k > g.n:
        return False
    adj, col = g.adj, c.colors

    def extend(v: int, used: set, on_path: list[bool], depth: int) -> bool:
        if depth == k:
            return True
        for w in adj[v]:
            if not on_path[w] and col[w] not in used:
                on_path[w] = True
                used.add(col[w])
                found = extend(w, used, on_path, depth + 1)
                used.discard(col[w])
                on_path[w] = False
                if found:
                    return True
        return False

    on_path = [False] * g.n
    for s in range(g.n):
        on_path[s] = True
        if extend(s, {col[s]}, on_path, 1):
            return True
        on_path[s] = False
    return False


def iter_paths(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every simple path on `k` vertices once, lower-id endpoint first."""
    if k < 1:
        return
    adj = g.adj
    if k == 1:
        yield from ((v,) for v in range(g.n))
        return
    path: list[int] = []
    on_path = [False] * g.n

    def walk(v: int):
        if len(path) == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        for w in adj[v]:
            if not on_path[w]:
                on_path[w] = True
                path.append(w)
                yield from walk(w)
                path.pop()
                on_path[w] = False

    for s in range(g.n):
        on_path[s] = True
        path.append(s)
        yield from walk(s)
        path.pop()
        on_path[s] = False


def has_path(g: Graph, k: int, removed: Iterable[Edge] = ()) -> bool:
    """True iff `g` minus the `removed` edges still contains a path on k vertices."""
    if k <= 1:
        return g.n >= k
    gone = {_norm_edge(*e) for e in removed}
    adj = [[w for w in g.adj[v] if _norm_edge(v, w) not in gone] for v in range(g.n)]
    on_path = [False] * g.n

    def reach(v: int, depth: int) -> bool:
        if depth == k:
            return True
        for w in adj[v]:
            if not on_path[w]:
                on_path[w] = True
                ok = reach(w, depth + 1)
                on_path[w] = False
                if ok:
                    return True
        return False

    for s in range(g.n):
        on_path[s] = True
        if reach(s, 1):
            return True
        on_path[s] = False
    return False


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-coloring classes ``(X, Y)`` with ``|X| >= |Y|``, or None if not bipartite.

    Ties go to the class containing vertex 0. Each component is 2-colored from
    its smallest vertex, which always lands on side 0.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    if len(b) > len(a):
        a, b = b, a
    return a, b


# --------------------------------------------------------------------------
# small named graphs used all over the tests and the CLI


def path_graph(n: int) -> Tree:
    return Tree(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Tree:
    return Tree(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    cls = Tree if isinstance(g, Tree) else Graph
    return cls(g.n, frozenset(_norm_edge(perm[u], perm[v]) for u, v in g.edges))
