import pytest

from jumplab import ratlin
from helpers import graph, labelled


@pytest.fixture(autouse=True)
def _penrose_checks():
    # every pseudoinverse computed by the suite is checked against the identities
    old = ratlin.CHECK_PENROSE
    ratlin.CHECK_PENROSE = True
    yield
    ratlin.CHECK_PENROSE = old


@pytest.fixture
def two_gon():
    return labelled("uv", ("Z1", "Z2"), ("e1", "u", "v", (1, 0)), ("e2", "u", "v", (0, 1)))


@pytest.fixture
def triangle():
    return graph("abc", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
