import pytest

from rainbowpaths.enumeration import all_trees
from rainbowpaths.exceptions import DomainError, ResourceError
from rainbowpaths.graphcore import Graph, complete_graph, has_path, has_rainbow_path, path_graph, star_graph
from rainbowpaths.solver import exact_c_k
from rainbowpaths.thwarting import (
    ThwartingSet,
    all_min_thwarting_sets,
    coloring_from_thwarting,
    min_thwarting_avoiding_leaf_edge,
    min_thwarting_containing_leaf_edge,
    theta_bruteforce,
    theta_tree_dp,
)
from rainbowpaths.zoo import corona


@pytest.mark.parametrize("n", range(1, 10))
def test_dp_matches_bruteforce(n):
    for t in all_trees(n):
        for k in (2, 3, 4, 5, 6):
            dp = theta_tree_dp(t, k)
            assert dp.value == theta_bruteforce(t, k).value
            assert len(dp.witness.edges) == dp.value
            assert dp.witness.is_valid_for(t)


def test_root_independent():
    for t in all_trees(8):
        vals = {theta_tree_dp(t, 4, root=r).value for r in range(t.n)}
        assert len(vals) == 1


def test_path_values():
    # pieces of at most k-1 vertices
    for n in range(1, 14):
        for k in (3, 4, 5):
            assert theta_tree_dp(path_graph(n), k).value == (n - 1) // (k - 1)


def test_induced_coloring_is_valid():
    for t in all_trees(8):
        f = theta_tree_dp(t, 4).witness
        c = coloring_from_thwarting(t, f)
        assert not has_rainbow_path(t, c, 4)
        assert c.color_count == t.n - len(f.edges)
        assert c.color_count == exact_c_k(t, 4).value


def test_invalid_set_rejected(p4):
    with pytest.raises(DomainError):
        coloring_from_thwarting(p4, ThwartingSet(4, frozenset()))


def test_non_tree_oracle():
    assert theta_bruteforce(complete_graph(4), 3).value == 4
    assert theta_bruteforce(complete_graph(3), 3).value == 2
    with pytest.raises(DomainError):
        theta_tree_dp(complete_graph(3), 3)
    with pytest.raises(ResourceError):
        theta_bruteforce(complete_graph(8), 3)


def test_all_min_sets(p4):
    sets = list(all_min_thwarting_sets(p4, 4))
    assert {tuple(sorted(s.edges)) for s in sets} == {((0, 1),), ((1, 2),), ((2, 3),)}
    assert theta_bruteforce(p4, 4).witness.to_json_list() == [[0, 1]]


def test_leaf_edge_lemmas():
    for n in range(2, 10):
        for t in all_trees(n):
            for leaf in (v for v in range(n) if t.degree(v) == 1):
                r = min_thwarting_avoiding_leaf_edge(t, leaf)
                assert r is not None and r.witness.is_valid_for(t)
    for core in (path_graph(2), path_graph(4), star_graph(3)):
        cor = corona(core)
        for leaf in range(core.n, cor.n):
            r = min_thwarting_containing_leaf_edge(cor, leaf)
            assert r is not None
            assert any(leaf in e for e in r.witness.edges)
    # K_2 is the corona of K_1: theta = 0, so no minimum set uses its edge
    assert min_thwarting_containing_leaf_edge(path_graph(2), 1) is None


def test_leaf_required():
    with pytest.raises(DomainError):
        min_thwarting_avoiding_leaf_edge(path_graph(4), 1)


def test_thwarting_validity():
    g = path_graph(5)
    assert ThwartingSet(4, frozenset({(1, 2)})).is_valid_for(g)
    assert not ThwartingSet(4, frozenset({(0, 1)})).is_valid_for(g)
    assert not ThwartingSet(3, frozenset({(2, 3)})).is_valid_for(g)
    assert ThwartingSet(3, frozenset({(1, 2), (3, 4)})).is_valid_for(g)
    assert not has_path(g, 3, [(1, 2), (3, 4)])
    assert not ThwartingSet(2, frozenset({(0, 4)})).is_valid_for(Graph(5, frozenset()))
