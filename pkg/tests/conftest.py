import pytest

from asai_gamma.field_tower import build_tower
from asai_gamma.matgroup import group_context

DESK = [(2, 1, 2), (3, 1, 2), (2, 1, 3)]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: needs the GL_3(F_4) context (a few seconds)")


@pytest.fixture(scope="session")
def t22():
    return build_tower(2, 1, 2)


@pytest.fixture(scope="session")
def t32():
    return build_tower(3, 1, 2)


@pytest.fixture(scope="session")
def t23():
    return build_tower(2, 1, 3)


@pytest.fixture(scope="session")
def ctx22(t22):
    return group_context(t22)


@pytest.fixture(scope="session")
def ctx32(t32):
    return group_context(t32)


@pytest.fixture(scope="session")
def ctx23(t23):
    return group_context(t23)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
