import pytest

from airviz.breakpoints import load_table

_acceptance_results: dict[str, bool] = {}


@pytest.fixture(scope="session")
def table():
    return load_table()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker:
        name = marker.args[0]
        # keep the worst outcome if a criterion spans multiple tests
        _acceptance_results[name] = _acceptance_results.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, passed in _acceptance_results.items():
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")
