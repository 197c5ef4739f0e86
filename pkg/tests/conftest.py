import pytest

from _corpus import SIGMA_TEXT, SWISS_TEXT
from pvdecomp.pv import parse_program

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): exit criterion n")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None and (report.when == "call" or report.outcome != "passed"):
        n, title = marker.args
        prev = _acceptance.get(n, (title, True))
        _acceptance[n] = (title, prev[1] and report.passed)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, ok = _acceptance[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def sigma():
    return parse_program(SIGMA_TEXT)


@pytest.fixture
def swiss():
    return parse_program(SWISS_TEXT)
