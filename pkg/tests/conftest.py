from functools import lru_cache

import pytest

from skewbrace.catalog import BraceCatalog, Provenance, enumerate_order


@lru_cache(maxsize=None)
def catalog_upto(n: int) -> BraceCatalog:
    braces = [B for k in range(1, n + 1) for B in enumerate_order(k)]
    return BraceCatalog.from_braces(braces, Provenance.HOLOMORPH)


@pytest.fixture(scope="session")
def cat8():
    return catalog_upto(8)


@pytest.fixture(scope="session")
def braces8(cat8):
    return cat8.braces()


@pytest.fixture(scope="session")
def cat12():
    return catalog_upto(12)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
