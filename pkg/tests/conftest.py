import functools

import pytest

from mahonian import oracle


@pytest.fixture(scope="session")
def scan():
    """Memoized exhaustive group scan, shared across the whole session."""

    @functools.lru_cache(maxsize=None)
    def _scan(c: int, n: int):
        return oracle.scan_group(n, c, cap=10**7)

    return _scan


@pytest.fixture(scope="session")
def coverage_1e6():
    """All (c, n) with c <= 10 whose group has at most 10^6 elements."""
    return oracle.coverage_pairs(10**6)
