"""Seeded random graph generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

# Independent RNG streams per consumer so that one integer seed can drive a
# generator and an attack plan without the two draws being correlated.
STREAM_GNM = 1
STREAM_BA = 2
STREAM_RNE = 3


def make_rng(seed: int, stream: int) -> np.random.Generator:
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    m: int
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("gnm", "barabasi_albert"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 1 or not 0 <= self.m <= _max_edges(self.n):
            raise ValueError(f"cannot place m={self.m} edges on n={self.n} nodes")
        if self.kind == "barabasi_albert" and (self.n < 4 or self.m < self.n):
            raise ValueError(f"preferential attachment needs n >= 4 and m >= n, got n={self.n}, m={self.m}")

    def build(self, seed: int | None = None) -> Graph:
        seed = self.seed if seed is None else seed
        if self.kind == "gnm":
            return gnm(self.n, self.m, seed)
        return barabasi_albert(self.n, self.m, seed)

    @property
    def name(self) -> str:
        prefix = "gnm" if self.kind == "gnm" else "ba"
        return f"{prefix}_{self.n}_{self.m}"


def _max_edges(n: int) -> int:
    return n * (n - 1) // 2


def gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly ``n`` nodes and ``m`` edges.

    Edges are listed in lexicographic ``(u, v)`` order with ``u < v``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = _max_edges(n)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}] for n={n}")
    rng = make_rng(seed, STREAM_GNM)
    picked = np.sort(rng.choice(total, size=m, replace=False)) if m else np.empty(0, np.int64)
    # Row u of the strict upper triangle starts at pair index u*n - u(u+1)/2.
    rows = np.arange(n, dtype=np.int64)
    row_start = rows * n - rows * (rows + 1) // 2
    u = np.searchsorted(row_start, picked, side="right") - 1
    v = picked - row_start[u] + u + 1
    return Graph(n, zip(u.tolist(), v.tolist()))


def _attachment_schedule(n: int, m_total: int, n0: int) -> list[int]:
    """Edges contributed by each of the ``n - n0`` arriving nodes."""
    arrivals = n - n0
    to_place = m_total - n0 * (n0 - 1) // 2
    base, extra = divmod(to_place, arrivals)
    # Spread the +1 steps evenly over the arrivals.
    counts = [base + ((t + 1) * extra // arrivals - t * extra // arrivals) for t in range(arrivals)]
    caps = [n0 + t for t in range(arrivals)]
    overflow = 0
    for t in range(arrivals):
        if counts[t] > caps[t]:
            overflow += counts[t] - caps[t]
            counts[t] = caps[t]
    for t in range(arrivals - 1, -1, -1):
        if not overflow:
            break
        room = min(caps[t] - counts[t], overflow)
        counts[t] += room
        overflow -= room
    return counts


def barabasi_albert(n: int, m_total: int, seed: int, n0: int = 3) -> Graph:
    """Connected preferential-attachment graph with exactly ``m_total`` edges.

    Starts from an ``n0``-clique; each arriving node links to a count of
    distinct existing nodes, chosen with probability proportional to degree,
    so that the counts sum to ``m_total``.
    """
    if n < n0 + 1:
        raise ValueError(f"n must exceed the seed clique size {n0}")
    seed_edges = n0 * (n0 - 1) // 2
    if m_total < n - n0 + seed_edges:
        raise ValueError(f"m_total={m_total} too small to keep {n} nodes connected")
    if m_total > _max_edges(n):
        raise ValueError(f"m_total={m_total} exceeds {_max_edges(n)} for n={n}")
    rng = make_rng(seed, STREAM_BA)

    edges = [(i, j) for i in range(n0) for j in range(i + 1, n0)]
    # Each node appears once per incident edge, so uniform draws are degree-biased.
    ends = [x for e in edges for x in e]
    for t, k in enumerate(_attachment_schedule(n, m_total, n0)):
        new = n0 + t
        if k == new:
            targets = set(range(new))
        else:
            targets = set()
            while len(targets) < k:
                targets.add(ends[int(rng.integers(len(ends)))])
        for target in sorted(targets):
            edges.append((target, new))
            ends.extend((target, new))
    return Graph(n, edges)
