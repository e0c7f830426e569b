"""Collects the acceptance-criterion outcomes and prints one line per criterion."""
from __future__ import annotations

_RESULTS: dict[str, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _RESULTS[name] = (name, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for func, label in CRITERIA:
        if func in _RESULTS:
            status = "PASS" if _RESULTS[func][1] else "FAIL"
            terminalreporter.write_line(f"{status}  {label}")
