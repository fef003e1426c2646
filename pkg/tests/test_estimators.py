import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from rainbowpaths.estimators import RainbowColoring, RainbowInvariants, check_graph, check_graphs
from rainbowpaths.exceptions import DomainError, GraphValidationError
from rainbowpaths.graphcore import complete_graph, path_graph
from rainbowpaths.solver import is_valid_coloring
from rainbowpaths.graphcore import Coloring


class TestCheckGraph:
    def test_inputs_agree(self):
        ref = path_graph(4)
        a = np.zeros((4, 4), dtype=int)
        for u, v in ref.edges:
            a[u, v] = a[v, u] = 1
        for x in (ref, "Ch", "0 1\n1 2\n2 3\n", nx.path_graph(4), a, [(0, 1), (1, 2), (2, 3)]):
            assert check_graph(x) == ref

    def test_rejects(self):
        with pytest.raises(GraphValidationError):
            check_graph(np.ones((2, 3)))
        with pytest.raises(GraphValidationError):
            check_graph(np.array([[0, 1], [0, 0]]))
        with pytest.raises(GraphValidationError):
            check_graph(np.eye(2))
        with pytest.raises(GraphValidationError):
            check_graph(nx.DiGraph([(0, 1)]))
        with pytest.raises(GraphValidationError):
            check_graph([(0, 1, 2)])
        with pytest.raises(GraphValidationError):
            check_graph(3.5)
        with pytest.raises(GraphValidationError):
            check_graphs("Ch")


class TestRainbowColoring:
    def test_fit(self):
        est = RainbowColoring(k=5).fit(path_graph(11))
        assert est.n_colors_ == 9 and est.defined_
        assert is_valid_coloring(path_graph(11), Coloring(est.labels_), 5)
        assert est.score() == 9.0

    def test_fit_predict_and_params(self):
        est = RainbowColoring(k=4, proper=True, count_optima=True)
        labels = est.fit_predict(nx.path_graph(9))
        assert len(set(labels)) == 6 and est.n_optimal_ == 1
        assert est.get_params() == {"k": 4, "proper": True, "count_optima": True, "max_n": None}
        c = clone(est).set_params(k=5)
        assert c.k == 5 and not hasattr(c, "labels_")

    def test_undefined(self):
        est = RainbowColoring(k=4, proper=True).fit(complete_graph(4))
        assert not est.defined_ and est.labels_ is None and np.isnan(est.score())

    def test_validation(self):
        with pytest.raises(DomainError):
            RainbowColoring(k=1).fit(path_graph(3))
        with pytest.raises(NotFittedError):
            RainbowColoring().score()


class TestRainbowInvariants:
    def test_transform(self):
        X = [path_graph(6), complete_graph(4), "EkE?"]
        out = RainbowInvariants(k=4).fit_transform(X)
        assert out.shape == (3, 3)
        assert out[0].tolist() == [5.0, 4.0, 1.0]
        assert np.isnan(out[1, 1])
        assert out[2].tolist() == [4.0, 4.0, 2.0]

    def test_feature_subset_and_names(self):
        est = RainbowInvariants(k=5, features=("theta",)).fit()
        assert est.get_feature_names_out().tolist() == ["theta_5"]
        assert est.transform([path_graph(9)]).tolist() == [[2.0]]
        with pytest.raises(DomainError):
            RainbowInvariants(features=("chi",)).fit()

    def test_pipeline(self):
        pipe = make_pipeline(RainbowInvariants(k=4, features=("c", "theta")), StandardScaler())
        out = pipe.fit_transform([path_graph(n) for n in range(4, 9)])
        assert out.shape == (5, 2)

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            RainbowInvariants().transform([path_graph(3)])
