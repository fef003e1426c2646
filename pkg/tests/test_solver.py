import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowpaths.enumeration import all_trees
from rainbowpaths.exceptions import DomainError, ResourceError
from rainbowpaths.graphcore import Coloring, Graph, complete_graph, path_graph, relabel, star_graph
from rainbowpaths.solver import (
    branching_order,
    count_optimal_partitions,
    enumerate_valid_colorings,
    exact_c_k,
    exact_cp_k,
    is_boring,
    is_valid_coloring,
    make_boring,
    solve,
)


def partitions(n):
    # restricted growth strings
    if n == 0:
        yield []
        return
    for head in partitions(n - 1):
        for c in range(max(head, default=-1) + 2):
            yield head + [c]


def brute(g, k, proper):
    best, count = None, 0
    for p in partitions(g.n):
        c = Coloring(p)
        if is_valid_coloring(g, c, k, proper):
            if best is None or c.color_count > best:
                best, count = c.color_count, 1
            elif c.color_count == best:
                count += 1
    return best, count


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


@settings(max_examples=80, deadline=None)
@given(small_graphs(), st.integers(3, 5), st.booleans())
def test_matches_partition_oracle(g, k, proper):
    value, count = brute(g, k, proper)
    res = solve(g, k, proper, count=True)
    assert res.value == value
    if value is not None:
        assert res.optimal_count == count
        assert res.witness.color_count == value
        assert is_valid_coloring(g, res.witness, k, proper)
    else:
        assert res.witness is None


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(2, 5), st.data())
def test_merging_classes_keeps_validity(g, k, data):
    # fewer colors can never create a rainbow path
    res = exact_c_k(g, k)
    c = res.witness
    if c.color_count < 2:
        return
    a, b = data.draw(st.lists(st.integers(0, c.color_count - 1), min_size=2, max_size=2, unique=True))
    merged = Coloring([a if x == b else x for x in c.colors])
    assert is_valid_coloring(g, merged, k)


def test_relabel_invariance():
    rng = random.Random(3)
    for t in list(all_trees(9))[::5]:
        perm = list(range(9))
        rng.shuffle(perm)
        u = relabel(t, perm)
        for k in (4, 5):
            assert exact_c_k(t, k).value == exact_c_k(u, k).value
            assert exact_cp_k(t, k).value == exact_cp_k(u, k).value


def test_known_values():
    assert exact_c_k(star_graph(5), 4).value == 6  # no P_4 at all
    assert exact_cp_k(star_graph(5), 4).value == 6
    assert exact_c_k(complete_graph(4), 3).value == 2
    assert exact_cp_k(complete_graph(4), 4).value is None
    assert exact_cp_k(complete_graph(3), 4).value == 3
    assert exact_c_k(path_graph(11), 5).value == 9


def test_undefined_and_guards():
    with pytest.raises(DomainError):
        count_optimal_partitions(complete_graph(4), 4, proper=True)
    with pytest.raises(DomainError):
        exact_cp_k(path_graph(3), 2)
    with pytest.raises(ResourceError):
        exact_c_k(path_graph(15), 4)
    assert exact_c_k(path_graph(15), 4, max_n=15).value == 11
    assert exact_cp_k(path_graph(16), 4).value == 9  # proper trees allow n <= 16
    assert exact_c_k(Graph(0, frozenset()), 4).value == 0


def test_int_conversion():
    assert int(exact_c_k(path_graph(5), 4)) == 4
    with pytest.raises(DomainError):
        int(exact_cp_k(complete_graph(4), 4))


def test_branching_order_connected_prefix():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])
    order = branching_order(g)
    assert order[0] == 3
    seen = {order[0]}
    for v in order[1:]:
        assert any(w in seen for w in g.adj[v])
        seen.add(v)


def test_enumerate_valid_colorings():
    cols = list(enumerate_valid_colorings(path_graph(4), 4, False, 3))
    assert all(c.color_count == 3 for c in cols)
    assert len(cols) == len(set(cols)) == brute_count_exact(path_graph(4), 4, 3)
    with pytest.raises(DomainError):
        list(enumerate_valid_colorings(path_graph(4), 4))


def brute_count_exact(g, k, m):
    return sum(1 for p in partitions(g.n) if max(p) + 1 == m and is_valid_coloring(g, Coloring(p), k))


class TestBoring:
    def test_definition(self):
        p5 = path_graph(5)
        c = Coloring([0, 1, 2, 1, 0])
        assert is_boring(p5, c, 2)  # both neighbors colored 1
        assert is_boring(p5, c, 1)  # distance-2 vertex 3 shares its color
        # 3 - 1 - 0 - 2 colored 2, 1, 0, 2: vertex 0 sees two colors and 3 differs from it
        t = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
        c = Coloring([0, 1, 2, 2])
        assert is_valid_coloring(t, c, 4, True)
        assert not is_boring(t, c, 0)
        assert all(is_boring(t, make_boring(t, c), v) for v in range(4))

    def test_recolors_random_optima(self):
        rng = random.Random(11)
        trees = [t for n in range(4, 10) for t in all_trees(n)]
        for _ in range(40):
            t = rng.choice(trees)
            v = exact_cp_k(t, 4).value
            c = rng.choice(list(enumerate_valid_colorings(t, 4, True, v)))
            b = make_boring(t, c)
            assert b.color_count == c.color_count
            assert is_valid_coloring(t, b, 4, True)
            assert all(is_boring(t, b, x) for x in range(t.n))

    def test_rejects(self, p4):
        with pytest.raises(DomainError):
            make_boring(p4, Coloring([0, 1, 0, 1]), k=5)
        with pytest.raises(DomainError):
            make_boring(p4, Coloring([0, 1, 2, 3]))
        with pytest.raises(DomainError):
            make_boring(complete_graph(3), Coloring([0, 1, 2]))
