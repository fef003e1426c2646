"""scikit-learn style wrappers over the solver and the thwarting DP.

A "sample" here is a whole graph. `check_graph` turns the usual inputs
into a `Graph`: a Graph, graph6 or edge-list text, a networkx graph, a
numpy adjacency matrix, or any other iterable of vertex pairs.
"""
from __future__ import annotations

import networkx as nx
import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import DomainError, GraphValidationError
from .graphcore import Graph, parse_graph
from .solver import solve
from .thwarting import theta_bruteforce, theta_tree_dp

FEATURES = ("c", "cp", "theta")


def check_graph(G) -> Graph:
    """Coerce `G` to a `Graph` or raise `GraphValidationError`."""
    if isinstance(G, Graph):
        return G
    if isinstance(G, str):
        text = G.strip()
        if "\n" not in text and " " not in text and text:
            try:
                return parse_graph(text, "graph6")
            except ValueError:
                pass
        return parse_graph(G, "edge-list")
    if isinstance(G, nx.Graph):
        if G.is_directed() or G.is_multigraph():
            raise GraphValidationError("expected a simple undirected networkx graph")
        index = {v: i for i, v in enumerate(sorted(G.nodes, key=repr))}
        return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in G.edges])
    if isinstance(G, np.ndarray):
        a = G
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphValidationError(f"adjacency matrix must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise GraphValidationError("adjacency matrix must be symmetric")
        if np.any(np.diag(a)):
            raise GraphValidationError("adjacency matrix has self-loops")
        if not np.isin(a, (0, 1)).all():
            raise GraphValidationError("adjacency matrix must be 0/1")
        rows, cols = np.nonzero(np.triu(a))
        return Graph.from_edges(a.shape[0], list(zip(rows.tolist(), cols.tolist())))
    try:
        pairs = [tuple(int(x) for x in e) for e in G]
    except (TypeError, ValueError) as exc:
        raise GraphValidationError(f"cannot interpret {type(G).__name__} as a graph") from exc
    if any(len(p) != 2 for p in pairs):
        raise GraphValidationError("edge list entries must be pairs")
    n = max((max(p) for p in pairs), default=-1) + 1
    return Graph.from_edges(n, pairs)


def check_graphs(X) -> list[Graph]:
    if isinstance(X, (Graph, str, nx.Graph)):
        raise GraphValidationError("expected a sequence of graphs; wrap a single graph in a list")
    return [check_graph(G) for G in X]


def _check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")
    return int(k)


class RainbowColoring(ClusterMixin, BaseEstimator):
    """Optimal coloring of one graph with no rainbow P_k.

    Vertices play the role of samples: ``labels_[v]`` is the color of v in a
    canonical optimal coloring and ``n_colors_`` the optimum c_k (or cp_k
    when ``proper``). When no proper coloring qualifies ``defined_`` is
    False, ``n_colors_`` is None and ``labels_`` is None.
    """

    def __init__(self, k: int = 4, proper: bool = False, count_optima: bool = False, max_n: int | None = None):
        self.k = k
        self.proper = proper
        self.count_optima = count_optima
        self.max_n = max_n

    def fit(self, X, y=None):
        k = _check_k(self.k)
        g = check_graph(X)
        res = solve(g, k, bool(self.proper), max_n=self.max_n, count=self.count_optima)
        self.graph_ = g
        self.defined_ = res.defined
        self.n_colors_ = res.value
        self.labels_ = np.asarray(res.witness.colors) if res.witness is not None else None
        self.n_optimal_ = res.optimal_count if self.count_optima else None
        self.search_nodes_ = res.nodes
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def score(self, X=None, y=None):
        """The optimum (NaN when undefined)."""
        check_is_fitted(self, "defined_")
        return float(self.n_colors_) if self.defined_ else float("nan")


class RainbowInvariants(TransformerMixin, BaseEstimator):
    """Map a list of graphs to rows ``[c_k, cp_k, theta_k]`` (selectable via `features`).

    Undefined cp_k is NaN. theta uses the tree DP on trees and brute force
    on other (small) graphs.
    """

    def __init__(self, k: int = 4, features=FEATURES, max_n: int | None = None):
        self.k = k
        self.features = features
        self.max_n = max_n

    def fit(self, X=None, y=None):
        _check_k(self.k)
        feats = tuple(self.features)
        bad = [f for f in feats if f not in FEATURES]
        if bad or not feats:
            raise DomainError(f"features must be a nonempty subset of {FEATURES}, got {feats}")
        self.features_ = feats
        self.n_features_out_ = len(feats)
        return self

    def _row(self, g: Graph) -> list[float]:
        k = _check_k(self.k)
        row = []
        for f in self.features_:
            if f == "theta":
                res = theta_tree_dp(g, k) if g.is_tree() else theta_bruteforce(g, k)
                row.append(float(res.value))
            else:
                res = solve(g, k, f == "cp", max_n=self.max_n)
                row.append(float(res.value) if res.defined else np.nan)
        return row

    def transform(self, X):
        check_is_fitted(self, "features_")
        graphs = check_graphs(X)
        out = np.empty((len(graphs), self.n_features_out_), dtype=float)
        for i, g in enumerate(graphs):
            out[i] = self._row(g)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "features_")
        return np.asarray([f"{f}_{self.k}" for f in self.features_], dtype=object)
