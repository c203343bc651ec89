import pytest

from liecoh.family import build_F, params

_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


@pytest.fixture
def acceptance_log():
    return record_acceptance


@pytest.fixture(scope="session")
def f2():
    return build_F(params(2, [3]))


@pytest.fixture(scope="session")
def f3():
    return build_F(params(3, [2, 7]))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
