import pytest
from hypothesis import strategies as st

from bbdehn import example_graph
from bbdehn.graph import Graph, complete, cycle, fan, join, path, point, suspension, wheel


@pytest.fixture(scope="session")
def disk0():
    return example_graph("square_disk0")


@pytest.fixture(scope="session")
def disk1():
    return example_graph("square_disk1")


@pytest.fixture(scope="session")
def disk2():
    return example_graph("square_disk2")


@pytest.fixture(scope="session")
def double_k4():
    return example_graph("double_k4")


def octahedron():
    return join(join(Graph.from_edges("ab", []), Graph.from_edges("cd", [])),
                Graph.from_edges("ef", []))


def k4_minus_edge():
    return Graph.from_edges("abcd", [("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")])


def corpus():
    """Named graphs reused across modules."""
    graphs = {
        "square_disk0": example_graph("square_disk0"),
        "square_disk1": example_graph("square_disk1"),
        "square_disk2": example_graph("square_disk2"),
        "double_k4": example_graph("double_k4"),
        "K3": complete(3),
        "K4": complete(4),
        "K5": complete(5),
        "C4": cycle(4),
        "C5": cycle(5),
        "P4": path(4),
        "octahedron": octahedron(),
        "K4-e": k4_minus_edge(),
        "star3": join(point("h"), Graph.from_edges("xyz", [])),
    }
    for n in range(2, 8):
        graphs[f"fan{n}"] = fan(n)
    for n in range(4, 9):
        graphs[f"wheel{n}"] = wheel(n)
    for n in range(1, 7):
        graphs[f"susp{n}"] = suspension(path(n))
    return graphs


@st.composite
def small_graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges([f"x{i}" for i in range(n)], chosen)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
