import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from attack_bench import EdgeAttack, Graph, i_index, make_plan, run_attack
from attack_bench._validation import check_graph, check_measure, check_seed, check_strategy
from attack_bench.estimators import mean_index
from attack_bench.graph import GraphError


def test_params_round_trip():
    est = EdgeAttack(strategy="ibe", varpi=2.0, random_state=4)
    params = est.get_params()
    assert params == {"strategy": "ibe", "varpi": 2.0, "measure": "node_fraction",
                      "thresholds": (0.2, 0.5, 0.7, 1.0), "random_state": 4}
    twin = clone(est).set_params(strategy="rne")
    assert twin.strategy == "rne" and est.strategy == "ibe"


def test_fit_transform_matches_functional_api(barbell):
    est = EdgeAttack(strategy="ibe")
    s = est.fit_transform(barbell)
    expected = run_attack(barbell, make_plan(barbell, "ibe"))
    assert s.tolist() == expected.s.tolist()
    assert est.order_[0] == 6
    assert est.score() == i_index(expected, 1.0)
    assert est.index_report().values[-1] == est.score()


def test_transform_checks_graph(triangle, star3):
    est = EdgeAttack().fit(triangle)
    with pytest.raises(ValueError):
        est.transform(star3)
    with pytest.raises(NotFittedError):
        EdgeAttack().transform(triangle)


def test_invalid_params_raise_on_fit(triangle):
    for params in ({"strategy": "random"}, {"measure": "area"}, {"thresholds": (0.9, 0.1)}):
        with pytest.raises(ValueError):
            EdgeAttack(**params).fit(triangle)


def test_accepts_edge_arrays_and_networkx_like(triangle):
    arr = np.array([[0, 1], [1, 2], [0, 2]])
    assert check_graph(arr) == triangle
    assert check_graph(arr.astype(float)) == triangle
    assert check_graph([], node_count=3) == Graph(3, [])

    class Duck:
        nodes = ["a", "b", "c"]
        edges = [("a", "b"), ("b", "c"), ("a", "c")]

    assert check_graph(Duck()) == triangle
    with pytest.raises(GraphError):
        check_graph(np.zeros((3, 3)))
    with pytest.raises(GraphError):
        check_graph(np.array([[0.5, 1.0]]))
    with pytest.raises(GraphError):
        check_graph(triangle, node_count=4)


def test_scalar_checks():
    assert check_strategy("IDE") == "ide"
    assert check_measure("edge") == "edge_fraction"
    assert check_seed(5) == 5
    assert 0 <= check_seed(None) < 2**64
    for bad in (-1, 2**64, 1.5, True):
        with pytest.raises(ValueError):
            check_seed(bad)


def test_edge_fraction_measure(triangle):
    s = EdgeAttack(strategy="ide", measure="edge_fraction").fit_transform(triangle)
    assert s[-1] == 0.0


def test_mean_index(triangle):
    values = mean_index([triangle] * 3, strategy="rne", seeds=[0, 1, 2])
    assert values.shape == (4,)
    assert values[-1] == pytest.approx(1 / 3)
