import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rltkit.compiler import compile, fixtures  # noqa: E402

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def compiled(spec, minimized=True):
    return compile(spec, minimize=minimized)


@pytest.fixture(scope="session")
def all_fixtures():
    return fixtures()


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
