import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with a summary line")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if call.when == "setup" and call.excinfo is not None:
        _acceptance[label] = "FAIL"
    elif call.when == "call":
        _acceptance[label] = "FAIL" if call.excinfo is not None else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in _acceptance.items():
        terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture
def f2():
    from orthonf import FiniteField

    return FiniteField(2)


@pytest.fixture
def f3():
    from orthonf import FiniteField

    return FiniteField(3)
