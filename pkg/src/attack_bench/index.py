"""Invulnerability index: signed area between a performance curve and ``1 - r``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .attacks import PerformanceCurve

DEFAULT_THRESHOLDS = (0.2, 0.5, 0.7, 1.0)

# Guards floor(q * M) against products such as 0.7 * 10 = 6.999999999999999.
_FLOOR_EPS = 1e-9


def removal_count(q: float, m_total: int) -> int:
    return int(math.floor(q * m_total + _FLOOR_EPS))


def _check_q(q: float) -> None:
    if not (0.0 < q <= 1.0):
        raise ValueError(f"threshold q must lie in (0, 1], got {q!r}")


def i_index(curve: PerformanceCurve, q: float = 1.0) -> float:
    """``(1/M) * sum_{k=1}^{K} [s(k/M) - (1 - k/M)]`` with ``K = floor(q M)``.

    Positive values mean the curve sits mostly above the baseline (robust),
    negative values mean below it (fragile). Single-run curves are summed
    exactly in rational arithmetic.
    """
    _check_q(q)
    m = curve.m_total
    if m == 0 or len(curve.s) == 0:
        raise ValueError("cannot index an empty curve")
    k = removal_count(q, m)
    # K(K+1)/2 - K*M is the baseline part of M * sum of the terms.
    baseline = Fraction(k * (k + 1), 2) - k * m
    if curve.counts is not None:
        total = Fraction(int(curve.counts[:k].sum()) * m, curve.scale) + baseline
        return float(total / (m * m))
    return (math.fsum(curve.s[:k].tolist()) * m + float(baseline)) / (m * m)


def ceiling(q: float, m_total: int) -> float:
    """Largest attainable index, reached only by a curve that stays at 1."""
    k = removal_count(q, m_total)
    return k * (k + 1) / (2 * m_total**2)


@dataclass(frozen=True)
class IndexReport:
    thresholds: tuple
    values: tuple
    measure: str
    strategy: str = ""

    def as_dict(self) -> dict:
        return {f"I_{q:g}": v for q, v in zip(self.thresholds, self.values)}


def check_thresholds(thresholds: Sequence[float]) -> tuple:
    thresholds = tuple(float(q) for q in thresholds)
    if not thresholds:
        raise ValueError("at least one threshold is required")
    for q in thresholds:
        _check_q(q)
    if list(thresholds) != sorted(thresholds):
        raise ValueError("thresholds must be sorted ascending")
    return thresholds


def index_report(curve: PerformanceCurve, thresholds=DEFAULT_THRESHOLDS, strategy: str = "") -> IndexReport:
    thresholds = check_thresholds(thresholds)
    values = tuple(i_index(curve, q) for q in thresholds)
    return IndexReport(thresholds, values, curve.measure, strategy)
