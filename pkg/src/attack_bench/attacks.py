"""Edge-attack planning and performance curves.

All orderings are computed once on the intact graph. Equal scores keep
ascending edge-index order, so results follow the input file's edge order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numba import njit

from .generators import STREAM_RNE, make_rng
from .graph import Graph, PlanError, _check_permutation, gcc_trajectory

STRATEGIES = ("rne", "ide", "ibe")
MEASURES = ("node_fraction", "edge_fraction")

# Betweenness sums are compared after rounding so that scores which are equal
# in exact arithmetic tie regardless of floating-point summation order.
_SCORE_DECIMALS = 9


@dataclass(frozen=True)
class AttackPlan:
    strategy: str
    order: np.ndarray
    scores: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class PerformanceCurve:
    """Normalised giant-component size after each single-edge removal.

    ``s[k-1]`` is the performance once ``k`` of ``m_total`` edges are gone.
    ``counts``/``scale`` hold the exact integer numerator and denominator when
    the curve comes from one run; averaged curves only carry ``s``.
    """

    s: np.ndarray
    measure: str
    m_total: int
    counts: Optional[np.ndarray] = field(default=None, repr=False)
    scale: Optional[int] = None

    @property
    def r(self) -> np.ndarray:
        return np.arange(1, self.m_total + 1) / self.m_total

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.r.tolist(), self.s.tolist()))

    def __len__(self):
        return self.m_total

    @classmethod
    def mean(cls, curves: Sequence["PerformanceCurve"]) -> "PerformanceCurve":
        if not curves:
            raise ValueError("cannot average zero curves")
        first = curves[0]
        for c in curves[1:]:
            if c.m_total != first.m_total or c.measure != first.measure:
                raise ValueError("curves differ in length or measure")
        s = np.mean(np.vstack([c.s for c in curves]), axis=0)
        return cls(s, first.measure, first.m_total)


def edge_degree(graph: Graph, edge: int, varpi: float = 1.0) -> float:
    """``(x_u * x_v) ** varpi`` for edge ``edge`` with endpoint degrees ``x``."""
    u, v = graph.edges[edge]
    return float(graph.degree(u) * graph.degree(v)) ** varpi


def edge_degrees(graph: Graph, varpi: float = 1.0) -> np.ndarray:
    if graph.edge_count == 0:
        return np.zeros(0)
    deg = graph.degrees.tolist()
    # Scalar pow on purpose: it matches edge_degree bit for bit, which vector pow may not.
    return np.array([float(deg[u] * deg[v]) ** varpi for u, v in graph.edges])


@njit(cache=True)
def _brandes_edges(indptr, neighbors, edge_ids, n, m):  # pragma: no cover - compiled
    scores = np.zeros(m)
    dist = np.empty(n, np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    stack = np.empty(n, np.int64)
    for source in range(n):
        dist[:] = -1
        sigma[:] = 0.0
        delta[:] = 0.0
        dist[source] = 0
        sigma[source] = 1.0
        stack[0] = source
        head = 0
        tail = 1
        # The BFS queue doubles as the stack of nodes in non-decreasing distance.
        while head < tail:
            v = stack[head]
            head += 1
            for j in range(indptr[v], indptr[v + 1]):
                w = neighbors[j]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    stack[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        for i in range(tail - 1, -1, -1):
            w = stack[i]
            for j in range(indptr[w], indptr[w + 1]):
                v = neighbors[j]
                if dist[v] == dist[w] - 1:
                    flow = sigma[v] / sigma[w] * (1.0 + delta[w])
                    scores[edge_ids[j]] += flow
                    delta[v] += flow
    return scores


def edge_betweenness(graph: Graph) -> np.ndarray:
    """Unnormalised shortest-path edge betweenness, each node pair counted once.

    Brandes' accumulation with one BFS per source; pairs on several shortest
    paths split their unit of flow equally among them.
    """
    n, m = graph.node_count, graph.edge_count
    if m == 0:
        return np.zeros(0)
    e = graph.edge_array()
    tail = np.concatenate([e[:, 0], e[:, 1]])
    head = np.concatenate([e[:, 1], e[:, 0]])
    edge_id = np.concatenate([np.arange(m), np.arange(m)])
    by_tail = np.lexsort((edge_id, tail))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(tail, minlength=n), out=indptr[1:])
    scores = _brandes_edges(indptr, head[by_tail].astype(np.int64), edge_id[by_tail].astype(np.int64), n, m)
    return scores / 2.0


def _ranked(strategy: str, scores: np.ndarray) -> AttackPlan:
    order = np.argsort(-scores, kind="stable")
    return AttackPlan(strategy, order, scores)


def plan_rne(graph: Graph, seed: int) -> AttackPlan:
    rng = make_rng(seed, STREAM_RNE)
    return AttackPlan("rne", rng.permutation(graph.edge_count))


def plan_ide(graph: Graph, varpi: float = 1.0) -> AttackPlan:
    return _ranked("ide", edge_degrees(graph, varpi))


def plan_ibe(graph: Graph) -> AttackPlan:
    return _ranked("ibe", np.round(edge_betweenness(graph), _SCORE_DECIMALS))


def make_plan(graph: Graph, strategy: str, varpi: float = 1.0, seed: int = 0) -> AttackPlan:
    if strategy == "rne":
        return plan_rne(graph, seed)
    if strategy == "ide":
        return plan_ide(graph, varpi)
    if strategy == "ibe":
        return plan_ibe(graph)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def run_attack(graph: Graph, plan, measure: str = "node_fraction") -> PerformanceCurve:
    """Remove edges in plan order and record the giant component after each."""
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}; expected one of {MEASURES}")
    order = plan.order if isinstance(plan, AttackPlan) else plan
    m = graph.edge_count
    try:
        order = _check_permutation(order, m)
    except PlanError as exc:
        raise PlanError(f"plan does not match graph: {exc}") from None
    trajectory = gcc_trajectory(graph, order)
    if measure == "node_fraction":
        counts = np.array([t.gcc_node_count for t in trajectory], dtype=np.int64)
        scale = graph.node_count
    else:
        counts = np.array([t.gcc_edge_count for t in trajectory], dtype=np.int64)
        scale = m
    return PerformanceCurve(counts / scale if m else np.zeros(0), measure, m, counts, scale)
