import pytest

from logarr import logmodules

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True, scope="module")
def _fresh_caches():
    logmodules.clear_caches()
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
