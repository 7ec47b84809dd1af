import pytest

from helpers import sample_graph as _sample_graph

_criteria = {}


@pytest.fixture
def sample_graph():
    """Five nodes A..E, six edges with weights 100..106."""
    return _sample_graph()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or report.outcome != "passed":
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        prev = _criteria.get(number, (None, "PASS"))[1]
        # a criterion passes only if every test carrying it passes
        if prev == "FAIL":
            status = "FAIL"
        _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}  {status}  {title}")
