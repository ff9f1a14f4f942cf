import functools

import pytest

from legplat.fillability import classify
from legplat.plat import enumerate_tuples

SWEEP_MAX = 10


@functools.lru_cache(maxsize=None)
def sweep_reports(max_crossings=SWEEP_MAX):
    return tuple((t, classify(t)) for t in enumerate_tuples(max_crossings, knots_only=True))


@pytest.fixture(scope="session")
def sweep():
    return sweep_reports()


@pytest.fixture
def report_line(capsys):
    """Print a line that survives output capture."""
    def emit(text):
        with capsys.disabled():
            print(f"\n{text}")
    return emit
