"""Named tree families: coronas, multi-coronas, double stars, octopuses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exceptions import DomainError
from .graphcore import Coloring, Graph, Tree, bipartition, has_path, path_graph, star_graph

FAMILIES = ("corona", "multi-corona", "double-star", "octopus", "path", "star")
MULTICORONA_CORES = ("P4", "P3-mid-deg-2")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a family member.

    ``b`` is the leaves per center for double stars, arms for octopuses,
    edges for stars and the order for paths. ``core`` and ``feet`` are used
    by the coronas.
    """

    family: str
    core: Graph | None = None
    b: int | None = None
    feet: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in ("corona", "multi-corona"):
            if self.core is None or self.core.n < 1:
                raise DomainError(f"{self.family} needs a nonempty core graph")
            if self.family == "multi-corona":
                if self.feet is None or len(self.feet) != self.core.n:
                    raise DomainError("multi-corona needs one feet count per core vertex")
                if any(f < 1 for f in self.feet):
                    raise DomainError("feet counts must all be >= 1")
        else:
            if self.b is None or self.b < 1:
                raise DomainError(f"{self.family} needs b >= 1")


def build(spec: FamilySpec) -> Graph:
    """Family member with core vertices first, then feet / arms in order."""
    f = spec.family
    if f in ("corona", "multi-corona"):
        core = spec.core
        counts = spec.feet if f == "multi-corona" else (1,) * core.n
        edges = set(core.edges)
        nxt = core.n
        for v, c in enumerate(counts):
            for _ in range(c):
                edges.add((v, nxt))
                nxt += 1
        g = Graph(nxt, frozenset(edges))
        return Tree.of(g) if g.is_tree() else g
    b = spec.b
    if f == "double-star":
        edges = {(0, 1)} | {(0, 2 + i) for i in range(b)} | {(1, 2 + b + i) for i in range(b)}
        return Tree(2 * b + 2, frozenset(edges))
    if f == "octopus":
        edges = {(0, i) for i in range(1, b + 1)} | {(i, b + i) for i in range(1, b + 1)}
        return Tree(2 * b + 1, frozenset(edges))
    if f == "path":
        return path_graph(b)
    return star_graph(b)


def corona(core: Graph) -> Graph:
    return build(FamilySpec("corona", core=core))


def multi_corona(core: Graph, feet: Sequence[int]) -> Graph:
    return build(FamilySpec("multi-corona", core=core, feet=tuple(feet)))


def double_star(b: int) -> Tree:
    return build(FamilySpec("double-star", b=b))


def octopus(b: int) -> Tree:
    return build(FamilySpec("octopus", b=b))


class CoronaCheck(NamedTuple):
    ok: bool
    core: frozenset[int] | None
    feet: dict[int, int] | None

    def __bool__(self):
        return self.ok


def is_corona(t: Graph) -> CoronaCheck:
    """Whether `t` is the corona of a tree, with the decomposition.

    Apart from K_2 the feet of a corona are exactly its leaves and each core
    vertex carries exactly one of them, so the decomposition is forced.
    """
    no = CoronaCheck(False, None, None)
    if not t.is_tree() or t.n % 2:
        return no
    if t.n == 2:
        return CoronaCheck(True, frozenset({0}), {0: 1})
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    feet = {}
    for v in range(t.n):
        if v in leaves:
            continue
        mine = [w for w in t.adj[v] if w in leaves]
        if len(mine) != 1:
            return no
        feet[v] = mine[0]
    if len(feet) != len(leaves):
        return no
    return CoronaCheck(True, frozenset(feet), feet)


def is_octopus(t: Graph) -> tuple[bool, int | None]:
    """``(True, b)`` if `t` is the octopus O_b (P_3 = O_1, P_5 = O_2)."""
    if not t.is_tree() or t.n < 3 or t.n % 2 == 0:
        return False, None
    b = (t.n - 1) // 2
    for c in range(t.n):
        if t.degree(c) != b:
            continue
        ok = True
        for m in t.adj[c]:
            if t.degree(m) != 2:
                ok = False
                break
            (leaf,) = [w for w in t.adj[m] if w != c]
            if t.degree(leaf) != 1:
                ok = False
                break
        if ok:
            return True, b
    return False, None


def is_multicorona_subgraph(t: Graph, core: str = "P4") -> bool:
    """Whether tree `t` embeds in a multi-corona of the named core.

    ``"P4"``: the non-leaf vertices form a path on at most four vertices.
    ``"P3-mid-deg-2"``: some degree-2 vertex has both neighbors carrying every
    other vertex as a leaf (the P_3 core whose middle keeps degree 2).
    """
    if core not in MULTICORONA_CORES:
        raise DomainError(f"core pattern must be one of {MULTICORONA_CORES}")
    if not t.is_tree():
        raise DomainError("expects a tree")
    if not has_path(t, 4):
        raise DomainError("tree contains no P_4")
    if core == "P4":
        inner = [v for v in range(t.n) if t.degree(v) >= 2]
        inner_set = set(inner)
        if len(inner) > 4:
            return False
        return all(sum(w in inner_set for w in t.adj[v]) <= 2 for v in inner)
    for m in range(t.n):
        if t.degree(m) != 2:
            continue
        x, y = t.adj[m]
        if all(v in (m, x, y) or (t.degree(v) == 1 and (t.adj[v][0] in (x, y))) for v in range(t.n)):
            return True
    return False


def is_double_broom(t: Graph) -> bool:
    """Whether the non-leaf vertices of tree `t` form a path on 2 to 4
    vertices whose interior vertices have degree 2.

    These are exactly the trees containing P_4 where one edge thwarts every
    P_4, i.e. ``c_4 = n - 1``. Leaves may hang only off the two spine ends.
    """
    if not t.is_tree():
        raise DomainError("expects a tree")
    inner = [v for v in range(t.n) if t.degree(v) >= 2]
    if not 2 <= len(inner) <= 4:
        return False
    inner_set = set(inner)
    spine_deg = {v: sum(w in inner_set for w in t.adj[v]) for v in inner}
    ends = [v for v in inner if spine_deg[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in spine_deg.values()):
        return False
    return all(t.degree(v) == 2 for v in inner if spine_deg[v] == 2)


def double_star_cp4(b: int) -> int:
    if b < 1:
        raise DomainError("double star needs b >= 1")
    return b + 2


def octopus_values(b: int) -> int:
    """c_5 and cp_5 of the octopus O_b (both equal)."""
    if b < 2:
        raise DomainError("octopus values hold for b >= 2")
    return b + 2


def bipartite_lower_bound_coloring(g: Graph, boost_leaf: int | None = None) -> Coloring:
    """Fresh colors on the larger side X, one shared color on Y.

    The result is proper with no rainbow P_4. With `boost_leaf` (a leaf on the
    smaller side; either side when they tie) that leaf also gets its own color
    and the result has no rainbow P_5.
    """
    parts = bipartition(g)
    if parts is None:
        raise DomainError("graph is not bipartite")
    x, y = parts
    if boost_leaf is not None:
        if not 0 <= boost_leaf < g.n or g.degree(boost_leaf) != 1:
            raise DomainError(f"boost vertex {boost_leaf} is not a leaf")
        if boost_leaf in x:
            if len(x) != len(y):
                raise DomainError(f"boost vertex {boost_leaf} is on the larger side")
            x, y = y, x
    shared = "Y"
    labels: list = [shared] * g.n
    for v in x:
        labels[v] = ("X", v)
    if boost_leaf is not None:
        labels[boost_leaf] = ("boost", boost_leaf)
    return Coloring(labels)
