import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chromforest.graph import Graph
from chromforest.generators import complete, cycle, path, small_connected_graphs, small_graphs

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def labelled_k3():
    """Triangle on 1, 2, 3: e1 = 12, e2 = 13, e3 = 23."""
    return Graph.from_edges([(1, 2), (1, 3), (2, 3)])


def labelled_c4():
    """4-cycle 1-2-3-4-1: e1 = 12, e2 = 14, e3 = 23, e4 = 34."""
    return Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=16)) if pairs else []
    return Graph.from_edges(chosen, vertices=range(n))


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    # join components along a path through their smallest vertices
    seen, reps = set(), []
    for v in range(g.n):
        if v not in seen:
            reps.append(v)
            stack = [v]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(y for y in range(g.n) if (g.adjacency[x] >> y) & 1)
    extra = list(zip(reps, reps[1:]))
    return Graph.from_edges(list(g.edges) + extra, vertices=range(g.n))


@pytest.fixture
def k3():
    return labelled_k3()


@pytest.fixture
def c4():
    return labelled_c4()


@pytest.fixture(scope="session")
def connected_le6():
    return small_connected_graphs(6)


@pytest.fixture(scope="session")
def all_le5():
    return small_graphs(5)


@pytest.fixture
def rng():
    return random.Random(20240601)


__all__ = ["complete", "cycle", "path", "labelled_k3", "labelled_c4", "graphs", "connected_graphs"]


# ------------------------------------------------------- acceptance summary
_ACCEPTANCE_OUTCOMES: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and (report.when == "call" or report.failed):
        n = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
        if report.failed or n not in _ACCEPTANCE_OUTCOMES:
            _ACCEPTANCE_OUTCOMES[n] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_OUTCOMES:
        return
    import sys

    module = sys.modules.get("test_acceptance")
    details = getattr(module, "SUMMARY", {})
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE_OUTCOMES):
        terminalreporter.write_line(f"criterion {n}: {_ACCEPTANCE_OUTCOMES[n]}  {details.get(n, '')}")
