"""Input coercion shared by the estimator API and the experiment runner."""

from __future__ import annotations

import numpy as np

from .attacks import MEASURES, STRATEGIES
from .graph import Graph, GraphError

_MEASURE_ALIASES = {"node": "node_fraction", "edge": "edge_fraction"}


def check_graph(X, node_count=None) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a ``Graph``, an ``(m, 2)`` integer array-like of edges over dense
    ids (``node_count`` defaults to ``max id + 1``), or any object exposing
    ``nodes`` and ``edges`` like a networkx graph, relabeled in node order.
    """
    if isinstance(X, Graph):
        if node_count is not None and node_count != X.node_count:
            raise GraphError(f"graph has {X.node_count} nodes, expected {node_count}")
        return X
    if hasattr(X, "nodes") and hasattr(X, "edges") and not isinstance(X, np.ndarray):
        index = {v: i for i, v in enumerate(X.nodes)}
        edges = [(index[u], index[v]) for u, v, *_ in X.edges]
        return Graph(max(len(index), 1), edges)
    arr = np.asarray(X)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError(f"expected an (m, 2) array of edges, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise GraphError("edge endpoints must be integer node ids")
        arr = arr.astype(np.int64)
    if node_count is None:
        node_count = int(arr.max()) + 1 if arr.size else 1
    return Graph(node_count, arr.tolist())


def check_strategy(strategy: str) -> str:
    strategy = str(strategy).lower()
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")
    return strategy


def check_measure(measure: str) -> str:
    measure = _MEASURE_ALIASES.get(measure, measure)
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}; expected node or edge")
    return measure


def check_seed(seed) -> int:
    """Unsigned 64-bit seed; ``None`` draws fresh OS entropy."""
    if seed is None:
        return int(np.random.SeedSequence().entropy) % 2**64
    if isinstance(seed, (bool, np.bool_)) or int(seed) != seed:
        raise ValueError(f"seed must be an integer, got {seed!r}")
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed
