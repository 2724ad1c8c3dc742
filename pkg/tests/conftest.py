import pytest

from semisize import make_named
from semisize.bitsets import from_elements


def m(*xs):
    return from_elements(xs)


@pytest.fixture(scope="session")
def z4():
    return make_named("cyclic_add", 4)


@pytest.fixture(scope="session")
def z6mul():
    return make_named("cyclic_mul", 6)


@pytest.fixture(scope="session")
def left_zero3():
    return make_named("left_zero", 3)


@pytest.fixture(scope="session")
def right_zero3():
    return make_named("right_zero", 3)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
