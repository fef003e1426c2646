"""Closed forms and optimal constructions for colorings of paths."""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DomainError
from .graphcore import Coloring, Graph, Tree


@dataclass(frozen=True)
class PathQuery:
    n: int
    k: int
    proper: bool = False

    def __post_init__(self):
        if self.n < 1 or self.k < 2:
            raise DomainError(f"need n >= 1 and k >= 2, got n={self.n}, k={self.k}")
        if self.proper and (self.k < 3 or self.n < 2):
            raise DomainError(f"proper path colorings need k >= 3 and n >= 2, got n={self.n}, k={self.k}")


def c_k_path(n: int, k: int) -> int:
    """Maximum colors on P_n with no rainbow P_k."""
    PathQuery(n, k)
    return (k - 2) * n // (k - 1) + 1


def cp_k_path(n: int, k: int) -> int:
    """Maximum colors on P_n in a proper coloring with no rainbow P_k."""
    PathQuery(n, k, proper=True)
    return ((k - 3) * n + 1) // (k - 2) + 1


def path_value(q: PathQuery) -> int:
    return cp_k_path(q.n, q.k) if q.proper else c_k_path(q.n, q.k)


def construct_path_coloring(q: PathQuery) -> Coloring:
    """Optimal coloring of the path ``0 - 1 - ... - (n-1)``.

    Starts with a rainbow block of ``k-1`` vertices, then appends blocks that
    open by repeating a color and continue with fresh colors. Unrestricted
    blocks have ``k-1`` vertices and repeat the last color; proper blocks have
    ``k-2`` vertices and repeat the penultimate color. The final block is
    truncated to fit.
    """
    n, k = q.n, q.k
    colors: list[int] = []
    fresh = 0
    head = min(n, k - 1)
    for _ in range(head):
        colors.append(fresh)
        fresh += 1
    block = k - 2 if q.proper else k - 1
    while len(colors) < n:
        for j in range(block):
            if len(colors) == n:
                break
            if j == 0:
                colors.append(colors[-2] if q.proper else colors[-1])
            else:
                colors.append(fresh)
                fresh += 1
    return Coloring(colors)


def path_coloring_unique(q: PathQuery) -> bool:
    """Whether the optimal coloring of P_n is unique up to renaming colors."""
    if q.n < q.k - 1:
        raise DomainError(f"uniqueness is only decided for n >= k-1 (n={q.n}, k={q.k})")
    if q.proper:
        return q.n % (q.k - 2) == 1 % (q.k - 2)
    return q.n % (q.k - 1) == 0


def attach_path(g: Graph, w: int, m: int) -> Graph:
    """Join one end of a fresh P_m to vertex `w`.

    New vertices get ids ``n .. n+m-1`` and id ``n`` is the end joined to `w`.
    Trees stay trees.
    """
    if not 0 <= w < g.n:
        raise DomainError(f"vertex {w} not in 0..{g.n - 1}")
    if m < 1:
        raise DomainError(f"attached path needs m >= 1, got {m}")
    n = g.n
    new = {(w, n)} | {(n + i, n + i + 1) for i in range(m - 1)}
    cls = Tree if isinstance(g, Tree) else Graph
    return cls(n + m, g.edges | frozenset(new))
