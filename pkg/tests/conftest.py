import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from attack_bench import Graph

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star3():
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path3():
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def barbell():
    # Triangles {0,1,2} and {3,4,5} joined by the bridge (2, 3), listed last.
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    rng.shuffle(edges)
    edges = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in edges]
    return Graph(n, edges)


@st.composite
def graphs(draw, max_nodes=12, min_edges=0):
    n = draw(st.integers(min_value=2 if min_edges else 1, max_value=max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))
                  if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def graphs_with_plans(draw, max_nodes=12):
    graph = draw(graphs(max_nodes=max_nodes, min_edges=1))
    order = draw(st.permutations(range(graph.edge_count)))
    return graph, list(order)


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_CRITERIA: dict = {}
_OUTCOMES: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid not in _CRITERIA:
        return
    if report.when == "call" or report.failed:
        failed = report.failed or _OUTCOMES.get(report.nodeid) == "FAIL"
        _OUTCOMES[report.nodeid] = "FAIL" if failed else ("SKIP" if report.skipped else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (cid, title) in _CRITERIA.items():
        if nodeid in _OUTCOMES:
            param = nodeid.split("[", 1)[1].rstrip("]") if "[" in nodeid else ""
            label = f"{cid}[{param}]" if param else str(cid)
            terminalreporter.write_line(f"criterion {label:<8} {_OUTCOMES[nodeid]}  {title}")
