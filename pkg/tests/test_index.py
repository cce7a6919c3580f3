from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from attack_bench import PerformanceCurve, i_index, index_report, make_plan, run_attack
from attack_bench.index import ceiling, check_thresholds, removal_count

from conftest import graphs_with_plans
from oracles import index_by_summation


def exact_curve(counts, scale):
    counts = np.asarray(counts, dtype=np.int64)
    return PerformanceCurve(counts / scale, "node_fraction", len(counts), counts, scale)


def test_triangle_index(triangle):
    curve = run_attack(triangle, [0, 1, 2])
    assert i_index(curve, 1.0) == 1 / 3


def test_flat_curve_hits_ceiling():
    curve = exact_curve([105] * 441, 105)
    # K = 88 removals inside q = 0.2.
    assert i_index(curve, 0.2) == pytest.approx(88 * 89 / (2 * 441**2), abs=1e-15)
    assert round(i_index(curve, 0.2), 6) == 0.020136


def test_baseline_curve_is_zero():
    m = 40
    s = 1 - np.arange(1, m + 1) / m
    curve = PerformanceCurve(s, "node_fraction", m)
    for q in (0.2, 0.5, 0.7, 1.0):
        assert i_index(curve, q) == pytest.approx(0.0, abs=1e-15)
    report = index_report(curve)
    assert report.values == pytest.approx((0, 0, 0, 0), abs=1e-15)


def test_exact_and_float_paths_agree():
    counts = [9, 9, 7, 5, 5, 2, 1]
    exact = exact_curve(counts, 10)
    approx = PerformanceCurve(exact.s.copy(), "node_fraction", 7)
    for q in (0.3, 0.5, 1.0):
        assert i_index(approx, q) == pytest.approx(i_index(exact, q), abs=1e-15)


@pytest.mark.parametrize("q", [0.0, -0.1, 1.0000001, 2])
def test_bad_threshold(q):
    with pytest.raises(ValueError):
        i_index(exact_curve([1], 1), q)


def test_empty_curve():
    with pytest.raises(ValueError):
        i_index(PerformanceCurve(np.zeros(0), "node_fraction", 0), 1.0)


def test_threshold_validation():
    assert check_thresholds([0.2, 1]) == (0.2, 1.0)
    for bad in ([], [0.5, 0.2], [0.2, 1.5]):
        with pytest.raises(ValueError):
            check_thresholds(bad)


def test_removal_count_guards_float_products():
    assert removal_count(0.7, 10) == 7
    assert removal_count(0.2, 190) == 38
    assert removal_count(0.7, 441) == 308


@settings(max_examples=300)
@given(graphs_with_plans(max_nodes=7), st.sampled_from([0.1, 0.2, 0.25, 0.5, 0.7, 0.9, 1.0]))
def test_matches_summation_oracle(case, q):
    graph, order = case
    assume(graph.edge_count <= 12)
    curve = run_attack(graph, order)
    expected = index_by_summation(curve.counts.tolist(), graph.node_count, q)
    assert i_index(curve, q) == float(expected)


@settings(max_examples=200)
@given(graphs_with_plans(max_nodes=10))
def test_bounds_and_prefix_consistency(case):
    graph, order = case
    curve = run_attack(graph, order)
    m, n = graph.edge_count, graph.node_count
    for q in (0.2, 0.5, 0.7, 1.0):
        k = removal_count(q, m)
        value = i_index(curve, q)
        assert value <= ceiling(q, m) + 1e-15
        floor = sum(1 / n - (1 - j / m) for j in range(1, k + 1)) / m
        assert value >= floor - 1e-12
    q1, q2 = 0.3, 0.8
    k1, k2 = removal_count(q1, m), removal_count(q2, m)
    partial = sum(Fraction(int(curve.counts[j - 1]), n) - 1 + Fraction(j, m) for j in range(k1 + 1, k2 + 1)) / m
    assert i_index(curve, q2) - i_index(curve, q1) == pytest.approx(float(partial), abs=1e-12)


@given(st.lists(st.integers(min_value=0, max_value=1000), min_size=1, max_size=40), st.booleans())
def test_sign_rule(raw, above):
    m = len(raw)
    base = 1 - np.arange(1, m + 1) / m
    # Push every point strictly to one side of the baseline.
    offsets = (np.asarray(raw) + 1) / 2000
    s = np.clip(base + offsets, 0, 1) if above else base - offsets
    if above and np.any(s <= base):
        return
    curve = PerformanceCurve(s, "node_fraction", m)
    value = i_index(curve, 1.0)
    assert value > 0 if above else value < 0


def test_report_labels(triangle):
    report = index_report(run_attack(triangle, make_plan(triangle, "ide")), strategy="ide")
    assert list(report.as_dict()) == ["I_0.2", "I_0.5", "I_0.7", "I_1"]
    assert report.measure == "node_fraction" and report.strategy == "ide"
