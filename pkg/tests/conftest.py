import pytest

from reject_lab import GaussianClassModel, UniformClassModel

# filled by tests/test_acceptance.py; one (criterion, passed, detail) entry per criterion
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def ex1():
    return GaussianClassModel.create(-1, 2, 1, 1, 0.5)


@pytest.fixture
def ex2():
    return GaussianClassModel.create(-1, 1, 1, 1, 0.5)


@pytest.fixture
def ex3():
    return GaussianClassModel.create(0, 2, 0, 1, 0.8)


@pytest.fixture
def ex4():
    return UniformClassModel.create(0, 1, 0.5, 2.5, 0.5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
