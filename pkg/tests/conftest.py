import pytest

from multitwist.multigraph import Multigraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_graph():
    return Multigraph("uvw", [("a1", "u", "v"), ("a2", "v", "w")])


def triangle():
    return Multigraph("xyz", [("b1", "x", "y"), ("b2", "y", "z"), ("b3", "z", "x")])


def theta():
    return Multigraph("uv", [("c1", "u", "v"), ("c2", "u", "v"), ("c3", "u", "v")])


def banana():
    return Multigraph("uv", [("b1", "u", "v"), ("b2", "u", "v")])


def single_loop():
    return Multigraph("x", [("c1", "x", "x")])


def star():
    return Multigraph(["c", "l1", "l2", "l3"], [("a1", "c", "l1"), ("a2", "c", "l2"), ("a3", "c", "l3")])


def k4():
    vs = "abcd"
    pairs = [(x, y) for i, x in enumerate(vs) for y in vs[i + 1:]]
    return Multigraph(vs, [(f"k{i}", x, y) for i, (x, y) in enumerate(pairs)])


def cycle_graph(n):
    vs = [f"v{i}" for i in range(n)]
    return Multigraph(vs, [(f"b{i + 1}", vs[i], vs[(i + 1) % n]) for i in range(n)])


@pytest.fixture
def graphs():
    return {
        "path": path_graph(),
        "triangle": triangle(),
        "theta": theta(),
        "banana": banana(),
        "loop": single_loop(),
        "star": star(),
        "k4": k4(),
    }
