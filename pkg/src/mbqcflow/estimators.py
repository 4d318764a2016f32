"""scikit-learn style wrapper around the flow finders.

A fitted :class:`FlowFinder` labels every vertex with its layer, much like a
clusterer labels samples, so it plugs into code written against the
``fit`` / ``fit_predict`` / ``get_params`` protocol.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from mbqcflow.analysis import check_maximally_delayed, layer_partition, verify_flow
from mbqcflow.causal import search_causal_flow
from mbqcflow.gflow import search_gflow
from mbqcflow.io import KINDS, FlowDocument
from mbqcflow.validation import check_open_graph

__all__ = ["FlowFinder"]


class FlowFinder(ClusterMixin, BaseEstimator):
    """Find a maximally delayed, minimum-depth flow of an open graph.

    Parameters
    ----------
    kind : {"gflow", "causal"}, default="gflow"
        Which notion of flow to search for.
    verify : bool, default=False
        Re-check the result with the independent verifiers after fitting and
        raise ``RuntimeError`` if it fails.  Meant for debugging.

    Attributes
    ----------
    graph_ : OpenGraph
        The validated input.
    flow_ : CausalFlow, GFlow or None
        The flow found, ``None`` if the graph has none.
    exists_ : bool
    depth_ : int or None
    labels_ : ndarray of shape (n_vertices,)
        Layer of each vertex (0 = measured last); ``-1`` everywhere when no
        flow exists.
    layers_ : LayerPartition or None
    frontier_ : frozenset of int
        Vertices left uncorrected when the search got stuck; empty on success.
    """

    def __init__(self, kind: str = "gflow", verify: bool = False):
        self.kind = kind
        self.verify = verify

    def fit(self, X, y=None):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        graph = check_open_graph(X)
        search = search_causal_flow if self.kind == "causal" else search_gflow
        flow, frontier = search(graph)
        if self.verify and flow is not None:
            for report in (verify_flow(graph, flow), check_maximally_delayed(graph, flow)):
                if not report.ok:
                    raise RuntimeError(f"flow failed verification: {report.violations}")
        self.graph_ = graph
        self.flow_ = flow
        self.exists_ = flow is not None
        self.frontier_ = frontier
        if flow is None:
            self.depth_ = None
            self.layers_ = None
            self.labels_ = np.full(graph.n, -1, dtype=np.int64)
        else:
            self.depth_ = flow.depth
            self.layers_ = layer_partition(flow)
            self.labels_ = np.asarray(flow.layer, dtype=np.int64)
        return self

    def to_document(self) -> FlowDocument:
        check_is_fitted(self, "graph_")
        return FlowDocument.from_flow(self.graph_, self.kind, self.flow_)
