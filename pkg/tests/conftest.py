import pytest

from pysmooth.characters.group import GroupRegistry
from pysmooth.core.factor_table import build_factor_table
from pysmooth.core.registry import TableRegistry
from pysmooth.saddle.dickman import build_dickman_table

TABLE_LIMIT = 200_000


def largest_prime_factor(n: int) -> int:
    """Trial division; P(1) = 1."""
    largest, p = 1, 2
    while p * p <= n:
        while n % p == 0:
            largest, n = p, n // p
        p += 1
    return max(largest, n) if n > 1 else largest


def smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def smooth_list(x: int, y: int) -> list[int]:
    return [n for n in range(1, x + 1) if largest_prime_factor(n) <= y]


@pytest.fixture(scope="session")
def table():
    return build_factor_table(TABLE_LIMIT)


@pytest.fixture(scope="session")
def groups():
    return GroupRegistry()


@pytest.fixture(scope="session")
def rho_table():
    return build_dickman_table(12.0, 1e-4)


@pytest.fixture
def registry(table, tmp_path):
    """TableRegistry holding the session table, restored afterwards."""
    TableRegistry.clear()
    TableRegistry.configure(cache_path=None)
    TableRegistry.register(table)
    yield TableRegistry
    TableRegistry.clear()
    TableRegistry.configure(cache_path=None)
