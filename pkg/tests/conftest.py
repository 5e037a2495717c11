import pytest

from picardrank.curve import HyperellipticCurve
from picardrank.lpoly import WeilPolynomial

PAPER_COEFFS = (3, 0, 1, -2, 2, -2, 1)
F5_DESC = [1, -2, 3, -10, 25]
F13_DESC = [1, 7, 35, 91, 169]


@pytest.fixture
def paper_curve():
    return HyperellipticCurve(PAPER_COEFFS)


@pytest.fixture
def f5():
    return WeilPolynomial.from_descending(5, 2, F5_DESC)


@pytest.fixture
def f13():
    return WeilPolynomial.from_descending(13, 2, F13_DESC)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
