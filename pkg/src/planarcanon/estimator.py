"""scikit-learn wrappers: graphs in, canons or isomorphism-class ids out."""

from __future__ import annotations

from collections.abc import Iterable

import networkx as nx
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .canonizer import canon_planar
from .errors import GraphFormatError
from .graph_model import Graph


def check_graph(obj) -> Graph:
    """Coerce a Graph, a networkx graph with integer nodes 0..n-1, or ``(n, edges)``."""
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, nx.Graph):
        n = obj.number_of_nodes()
        if set(obj.nodes) != set(range(n)):
            raise GraphFormatError("networkx graphs must use nodes 0..n-1")
        colors = nx.get_node_attributes(obj, "color")
        return Graph.from_edges(n, obj.edges, colors or None)
    if isinstance(obj, tuple) and len(obj) == 2:
        n, edges = obj
        return Graph.from_edges(int(n), edges)
    raise GraphFormatError(f"cannot interpret {type(obj).__name__} as a graph")


def _check_graphs(X) -> list[Graph]:
    if isinstance(X, (Graph, nx.Graph)):
        raise GraphFormatError("expected a sequence of graphs, got a single graph")
    return [check_graph(g) for g in X]


class PlanarCanonizer(TransformerMixin, BaseEstimator):
    """Map each planar graph to its canon text.

    Stateless; ``fit`` only validates input. Equal outputs mean isomorphic
    graphs.
    """

    def __init__(self, root_policy: str = "exhaustive"):
        self.root_policy = root_policy

    def fit(self, X: Iterable, y=None):
        _check_graphs(X)
        self.is_fitted_ = True
        return self

    def transform(self, X: Iterable) -> np.ndarray:
        check_is_fitted(self)
        graphs = _check_graphs(X)
        return np.array([canon_planar(g, self.root_policy).text() for g in graphs], dtype=object)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.requires_fit = False
        return tags


class IsomorphismClassEncoder(TransformerMixin, BaseEstimator):
    """Encode graphs by isomorphism class, numbered in order of sorted canon.

    Graphs whose class was not seen during ``fit`` map to ``unknown_value``.
    """

    def __init__(self, root_policy: str = "exhaustive", unknown_value: int = -1):
        self.root_policy = root_policy
        self.unknown_value = unknown_value

    def fit(self, X: Iterable, y=None):
        canons = PlanarCanonizer(self.root_policy).fit_transform(X)
        self.classes_ = np.array(sorted(set(canons)), dtype=object)
        self._index = {c: i for i, c in enumerate(self.classes_)}
        return self

    def transform(self, X: Iterable) -> np.ndarray:
        check_is_fitted(self, "classes_")
        canons = PlanarCanonizer(self.root_policy).fit_transform(X)
        return np.array([self._index.get(c, self.unknown_value) for c in canons], dtype=int)

    def inverse_transform(self, codes: Iterable[int]) -> np.ndarray:
        check_is_fitted(self, "classes_")
        return self.classes_[np.asarray(codes, dtype=int)]

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        return tags
