"""Immutable simple undirected graphs and giant-component queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Malformed graph input."""


class SelfLoopError(GraphError):
    pass


class NodeRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class PlanError(ValueError):
    """An edge ordering that is not a permutation of the graph's edges."""


class Graph:
    """Simple undirected graph with a stable, indexed edge list.

    Node ids are dense integers ``0 .. node_count - 1``. ``edges[i]`` keeps the
    orientation it was given in and never changes.
    """

    __slots__ = ("_node_count", "_edges", "_adjacency", "_degrees")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if int(node_count) != node_count or node_count < 1:
            raise GraphError(f"node_count must be a positive integer, got {node_count!r}")
        node_count = int(node_count)
        seen = set()
        pairs = []
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(node_count)]
        for index, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise NodeRangeError(f"edge {index} ({u}, {v}) outside [0, {node_count})")
            if u == v:
                raise SelfLoopError(f"edge {index} is a self-loop on node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"edge {index} ({u}, {v}) duplicates an earlier edge")
            seen.add(key)
            pairs.append((u, v))
            adjacency[u].append((v, index))
            adjacency[v].append((u, index))
        self._node_count = node_count
        self._edges = tuple(pairs)
        self._adjacency = tuple(tuple(a) for a in adjacency)
        degrees = np.fromiter((len(a) for a in adjacency), dtype=np.int64, count=node_count)
        degrees.setflags(write=False)
        self._degrees = degrees

    @property
    def node_count(self) -> int:
        return self._node_count

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per node, ``(neighbor, edge_index)`` pairs."""
        return self._adjacency

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, node: int) -> int:
        return len(self._adjacency[node])

    @property
    def average_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` integer array."""
        if not self._edges:
            return np.empty((0, 2), dtype=np.int64)
        return np.asarray(self._edges, dtype=np.int64)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._node_count == other._node_count and self._edges == other._edges

    def __hash__(self):
        return hash((self._node_count, self._edges))

    def __repr__(self):
        return f"Graph(node_count={self._node_count}, edge_count={self.edge_count})"


def from_edges(node_count: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(node_count, edge_pairs)


@dataclass(frozen=True)
class ComponentSummary:
    gcc_node_count: int
    gcc_edge_count: int
    component_count: int


def giant_component(graph: Graph, removed: Iterable[int] = ()) -> ComponentSummary:
    """Largest component after deleting the ``removed`` edge indices.

    Components are ranked by node count, then by edge count.
    """
    removed = set(removed)
    m = graph.edge_count
    for e in removed:
        if not 0 <= e < m:
            raise PlanError(f"edge index {e} out of range [0, {m})")
    n = graph.node_count
    adjacency = graph.adjacency
    visited = [False] * n
    best = (0, 0)
    components = 0
    for start in range(n):
        if visited[start]:
            continue
        components += 1
        visited[start] = True
        queue = deque([start])
        nodes = 0
        edge_ends = 0
        while queue:
            v = queue.popleft()
            nodes += 1
            for w, e in adjacency[v]:
                if e in removed:
                    continue
                edge_ends += 1
                if not visited[w]:
                    visited[w] = True
                    queue.append(w)
        best = max(best, (nodes, edge_ends // 2))
    return ComponentSummary(best[0], best[1], components)


def _check_permutation(order: Sequence[int], m: int) -> np.ndarray:
    order = np.asarray(order)
    if order.ndim != 1 or order.shape[0] != m:
        raise PlanError(f"plan has {order.size} entries, graph has {m} edges")
    if m and not np.issubdtype(order.dtype, np.integer):
        raise PlanError("plan entries must be integer edge indices")
    order = order.astype(np.int64, copy=False)
    if m and (np.bincount(order, minlength=m).max() != 1 or order.min() < 0 or order.max() >= m):
        raise PlanError("plan is not a permutation of the edge indices")
    return order


def gcc_trajectory(graph: Graph, order: Sequence[int]) -> list[ComponentSummary]:
    """Giant-component summaries after each of the ``M`` removals in ``order``.

    Runs the removal sequence backwards, re-inserting edges into a union-find
    structure, so the whole trajectory costs ``O(M alpha(N))``.
    """
    n, m = graph.node_count, graph.edge_count
    order = _check_permutation(order, m)
    edges = graph.edges

    parent = list(range(n))
    size = [1] * n
    inner = [0] * n
    components = n
    best = (1, 0)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    out = [None] * m
    # State k (first k edges removed) is recorded before re-inserting order[k - 1].
    for k in range(m, 0, -1):
        out[k - 1] = ComponentSummary(best[0], best[1], components)
        u, v = edges[order[k - 1]]
        ru, rv = find(u), find(v)
        if ru == rv:
            inner[ru] += 1
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            inner[ru] += inner[rv] + 1
            components -= 1
        key = (size[ru], inner[ru])
        if key > best:
            best = key
    return out
