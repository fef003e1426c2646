import pytest

from rainbowpaths.graphcore import Graph, path_graph, star_graph

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def spider_221():
    # legs of lengths 2, 2, 1 around vertex 0
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])


@pytest.fixture
def claw():
    return star_graph(3)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    props = dict(report.user_properties)
    label = props.get("criterion", report.nodeid.split("::")[-1])
    _ACCEPTANCE.append((label, "PASS" if report.passed else "FAIL", props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{verdict}  {label}: {detail}")
