import pytest
from hypothesis import strategies as st

from scmkit.gen import PlainTree, ade, chain, example_graphs, rationalize_tree
from scmkit.graph import DualGraph


@pytest.fixture
def G1():
    return example_graphs()["G1"]


@pytest.fixture
def G2():
    return example_graphs()["G2"]


@pytest.fixture
def G3():
    return example_graphs()["G3"]


@pytest.fixture
def minus3():
    return chain([-3])


@st.composite
def plain_trees(draw, max_vertices=10):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{k}" for k in range(n)]
    # random recursive tree: attach each new vertex to an earlier one
    edges = [(names[draw(st.integers(0, k - 1))], names[k]) for k in range(1, n)]
    order = draw(st.permutations(range(n)))
    return PlainTree(tuple(names[k] for k in order), tuple(edges))


@st.composite
def rational_graphs(draw, max_vertices=10):
    """Rationalized trees with some weights pushed further down.

    Lowering self-intersections keeps a rational graph rational.
    """
    g = rationalize_tree(draw(plain_trees(max_vertices)))
    drops = draw(st.lists(st.integers(0, 2), min_size=len(g), max_size=len(g)))
    return DualGraph(tuple((v, w - d) for (v, w), d in zip(g.vertices, drops)), g.edges)


ADE_LABELS = [f"A{k}" for k in range(1, 9)] + [f"D{k}" for k in range(4, 9)] + ["E6", "E7", "E8"]


@pytest.fixture(params=ADE_LABELS)
def ade_graph(request):
    return request.param, ade(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
