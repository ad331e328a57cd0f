import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = item.get_closest_marker("criterion")
    if label is None or rep.when != "call":
        return
    detail = getattr(item, "criterion_detail", "")
    status = "PASS" if rep.passed else "FAIL"
    _LINES.append(f"{status}  {label.args[0]:<40} {detail}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion, reported as PASS/FAIL")


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
