"""scikit-learn style wrapper around attack planning and indexing."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_graph, check_measure, check_seed, check_strategy
from .attacks import PerformanceCurve, make_plan, run_attack
from .index import DEFAULT_THRESHOLDS, IndexReport, check_thresholds, i_index, index_report


class EdgeAttack(TransformerMixin, BaseEstimator):
    """Edge-removal attack on a network.

    ``fit`` ranks the edges of the intact graph; ``transform`` replays that
    ranking and returns performance ``s`` after each removal; ``score`` gives
    the invulnerability index at the last threshold.

    Parameters
    ----------
    strategy : {"rne", "ide", "ibe"}
        Random, endpoint-degree or betweenness ordering.
    varpi : float
        Exponent on endpoint degrees for ``ide``.
    measure : {"node_fraction", "edge_fraction"}
        Giant-component nodes over N, or giant-component edges over M.
    thresholds : sequence of float
        Removal fractions at which ``index_report`` evaluates the index.
    random_state : int or None
        Seed for ``rne``.
    """

    def __init__(self, strategy="ide", varpi=1.0, measure="node_fraction",
                 thresholds=DEFAULT_THRESHOLDS, random_state=0):
        self.strategy = strategy
        self.varpi = varpi
        self.measure = measure
        self.thresholds = thresholds
        self.random_state = random_state

    def fit(self, X, y=None):
        strategy = check_strategy(self.strategy)
        check_measure(self.measure)
        check_thresholds(self.thresholds)
        graph = check_graph(X)
        self.seed_ = check_seed(self.random_state)
        self.graph_ = graph
        self.plan_ = make_plan(graph, strategy, varpi=float(self.varpi), seed=self.seed_)
        self.order_ = self.plan_.order
        self.n_edges_ = graph.edge_count
        return self

    def _fitted_graph(self, X):
        check_is_fitted(self, "plan_")
        if X is None:
            return self.graph_
        graph = check_graph(X)
        if graph != self.graph_:
            raise ValueError("the attack plan was fitted on a different graph")
        return graph

    def curve(self, X=None) -> PerformanceCurve:
        graph = self._fitted_graph(X)
        return run_attack(graph, self.plan_, check_measure(self.measure))

    def transform(self, X=None):
        return self.curve(X).s

    def index_report(self, X=None) -> IndexReport:
        return index_report(self.curve(X), self.thresholds, check_strategy(self.strategy))

    def score(self, X=None, y=None):
        return i_index(self.curve(X), check_thresholds(self.thresholds)[-1])


def mean_index(graphs, strategy="rne", seeds=None, **params) -> np.ndarray:
    """Index values averaged over ``(graph, seed)`` pairs."""
    graphs = list(graphs)
    seeds = range(len(graphs)) if seeds is None else list(seeds)
    reports = [EdgeAttack(strategy=strategy, random_state=s, **params).fit(g).index_report()
               for g, s in zip(graphs, seeds)]
    return np.mean([r.values for r in reports], axis=0)
