import pytest

from entangle.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k1():
    return empty_graph(1)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def dipath3():
    return Graph.from_edges(3, [(0, 1), (1, 2)], directed=True)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        number, text = marker.args
        verdict = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{verdict}] criterion {number:>2}: {text} ({report.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
