import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowpaths.exceptions import DomainError, GraphValidationError, ParseError
from rainbowpaths.graphcore import (
    Coloring,
    Graph,
    PathPattern,
    Tree,
    bipartition,
    complete_graph,
    connected_components,
    has_path,
    has_rainbow_path,
    is_proper,
    iter_paths,
    monochromatic_edges,
    parse_graph,
    parse_graph6,
    path_graph,
    read_graph_file,
    relabel,
    serialize_graph,
    star_graph,
    to_graph6,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphValidationError):
            Graph(3, frozenset({(1, 1)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphValidationError):
            Graph(2, frozenset({(0, 2)}))

    def test_from_edges_rejects_duplicates(self):
        with pytest.raises(GraphValidationError):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_edges_normalized(self):
        g = Graph.from_edges(3, [(2, 1), (1, 0)])
        assert g.sorted_edges == ((0, 1), (1, 2))
        assert g.adj == ((1,), (0, 2), (1,))

    def test_tree_equals_graph(self):
        assert path_graph(4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert hash(path_graph(4)) == hash(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))

    def test_tree_validation(self):
        with pytest.raises(DomainError):
            Tree(3, frozenset({(0, 1)}))
        with pytest.raises(DomainError):
            Tree.of(complete_graph(3))
        assert Tree(1, frozenset()).is_tree()

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (3, 4)])
        assert sorted(map(sorted, g.components())) == [[0, 1], [2], [3, 4]]
        assert not g.is_connected()
        assert connected_components(3, []) == [[0], [1], [2]]


class TestColoring:
    def test_partition_equality(self):
        assert Coloring("abca") == Coloring([5, 2, 7, 5])
        assert Coloring([1, 1, 0]).colors == (0, 0, 1)
        assert Coloring([3, 3]).color_count == 1

    def test_json_round_trip(self):
        c = Coloring([0, 1, 1, 2])
        assert Coloring.from_json(c.to_json()) == c
        with pytest.raises(ParseError):
            Coloring.from_json(json.dumps({"a": 1}))

    def test_classes(self):
        assert Coloring([0, 1, 0]).classes() == [[0, 2], [1]]

    def test_proper_and_mono(self, p4):
        c = Coloring([0, 0, 1, 2])
        assert not is_proper(p4, c)
        assert monochromatic_edges(p4, c) == {(0, 1)}


class TestRainbow:
    def test_p4_rainbow(self, p4):
        assert has_rainbow_path(p4, Coloring([0, 1, 2, 3]), 4)
        assert not has_rainbow_path(p4, Coloring([0, 1, 2, 0]), 4)
        assert has_rainbow_path(p4, Coloring([0, 1, 2, 0]), 3)

    def test_pattern_object(self, p4):
        assert has_rainbow_path(p4, Coloring([0, 1, 2, 3]), PathPattern(4))
        with pytest.raises(DomainError):
            PathPattern(1)

    def test_length_mismatch(self, p4):
        with pytest.raises(DomainError):
            has_rainbow_path(p4, Coloring([0, 1]), 3)

    def test_k5_on_spider(self, spider_221):
        # the longest path has 5 vertices: 2-1-0-3-4
        c = Coloring([0, 1, 2, 3, 4, 5])
        assert has_rainbow_path(spider_221, c, 5)
        assert not has_rainbow_path(spider_221, c, 6)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8), st.integers(2, 5), st.data())
    def test_rainbow_matches_path_listing(self, g, k, data):
        c = Coloring(data.draw(st.lists(st.integers(0, 4), min_size=g.n, max_size=g.n)))
        naive = any(len({c[v] for v in p}) == k for p in iter_paths(g, k))
        assert has_rainbow_path(g, c, k) == naive

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8), st.integers(2, 6))
    def test_has_path_matches_networkx(self, g, k):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        found = any(
            len(p) == k
            for s in h
            for t in h
            if s < t
            for p in nx.all_simple_paths(h, s, t, cutoff=k - 1)
        )
        assert has_path(g, k) == found

    def test_iter_paths_once(self):
        assert sorted(iter_paths(path_graph(4), 3)) == [(0, 1, 2), (1, 2, 3)]
        assert len(list(iter_paths(complete_graph(4), 4))) == 12


class TestFormats:
    def test_known_graph6(self):
        assert to_graph6(path_graph(4)) == "Ch"
        assert to_graph6(complete_graph(4)) == "C~"
        assert parse_graph6(">>graph6<<C~") == complete_graph(4)

    def test_graph6_errors(self):
        with pytest.raises(ParseError):
            parse_graph6("")
        with pytest.raises(ParseError) as e:
            parse_graph6("C~~")
        assert e.value.offset is not None
        with pytest.raises(ParseError):
            parse_graph6("C\x7f")

    def test_graph6_padding(self):
        assert parse_graph6("Bw") == complete_graph(3)
        with pytest.raises(ParseError):
            parse_graph6("Bx")

    def test_large_order_header(self):
        g = path_graph(70)
        s = to_graph6(g)
        assert s[0] == "~"
        assert parse_graph6(s) == g

    def test_edge_list_gaps_reindexed(self):
        g, mapping = parse_graph("10 20\n20 30 # comment\n", return_mapping=True)
        assert g == path_graph(3)
        assert mapping == {10: 0, 20: 1, 30: 2}

    def test_edge_list_errors_carry_line(self):
        with pytest.raises(ParseError) as e:
            parse_graph("0 1\n1 x\n")
        assert e.value.line == 2
        with pytest.raises(GraphValidationError):
            parse_graph("0 1\n1 0\n")
        with pytest.raises(ValueError):
            parse_graph("0 1", format="dot")

    def test_isolated_vertices_directive(self):
        g = Graph.from_edges(4, [(0, 1)])
        text = serialize_graph(g)
        assert text.startswith("# n 4")
        assert parse_graph(text) == g

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_round_trips(self, g):
        assert parse_graph6(to_graph6(g)) == g
        assert parse_graph(serialize_graph(g, "edge-list")) == g

    def test_read_graph_file(self, tmp_path):
        (tmp_path / "a.g6").write_text("Ch\n")
        (tmp_path / "b.txt").write_text("0 1\n1 2\n2 3\n")
        assert read_graph_file(str(tmp_path / "a.g6")) == read_graph_file(str(tmp_path / "b.txt"))


class TestHelpers:
    def test_bipartition(self):
        x, y = bipartition(star_graph(3))
        assert x == {1, 2, 3} and y == {0}
        assert bipartition(complete_graph(3)) is None
        x, y = bipartition(path_graph(4))
        assert 0 in x and len(x) == len(y)

    def test_relabel(self):
        g = relabel(path_graph(3), [2, 0, 1])
        assert g.edges == {(0, 2), (0, 1)}
