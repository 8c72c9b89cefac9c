"""Collects the acceptance-criterion outcomes and prints one line per criterion."""
import pytest

_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    previous = _RESULTS.get(number)
    if previous is None or previous[0] == "PASS":
        _RESULTS[number] = (status, title, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, seconds = _RESULTS[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({seconds:.2f} s)")
