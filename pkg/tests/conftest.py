import pytest

from eflcolor import Hypergraph


@pytest.fixture
def triangle():
    # a=0, b=1, c=2 pairwise joined; x=4, y=5, z=3 pad the edges to size 3
    return Hypergraph(6, [[0, 1, 4], [1, 2, 5], [0, 2, 3]])


@pytest.fixture
def triangle_h1():
    return Hypergraph(3, [[0, 1], [1, 2], [0, 2]])


def naive_degree(edge_lists, v):
    return sum(1 for e in edge_lists if v in e)


def naive_adjacency(edge_lists, v):
    out = set()
    for e in edge_lists:
        if v in e:
            out.update(e)
    out.discard(v)
    return out


def five_degree_two_instance():
    """Nine 9-vertex edges; edge pairs (0,1) (2,3) (4,5) (6,7) (8,0) each share one private vertex."""
    pairs = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 0)]
    edges = [[] for _ in range(9)]
    for w, (a, b) in enumerate(pairs):
        edges[a].append(w)
        edges[b].append(w)
    nxt = len(pairs)
    for e in edges:
        while len(e) < 9:
            e.append(nxt)
            nxt += 1
    return Hypergraph(nxt, edges)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_criteria[label]}  {label}")
