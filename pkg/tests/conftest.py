import os

import pytest

from nutkit.catalog import load_seed_catalog

EXTENDED = os.environ.get("NUTKIT_EXTENDED") == "1"

# lines recorded by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def seeds():
    return load_seed_catalog()


@pytest.fixture(scope="session")
def seed_by_key(seeds):
    return {(s.degree, s.order): s for s in seeds}
