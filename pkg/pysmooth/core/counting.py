# counting.py ------------------------------------------------
"""Direct counts of y-smooth integers read off a FactorTable."""

import numpy as np

from .errors import DomainError
from .factor_table import FactorTable


def _check(x: int, y: int, table: FactorTable) -> None:
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    if y < 1:
        raise DomainError(f"y must be at least 1, got {y}")
    table.require(x)


def _smooth_mask(lo: int, hi: int, y: int, table: FactorTable) -> np.ndarray:
    # largest[n] ≤ limit, so clamping y keeps the comparison inside uint32
    return table.largest[lo:hi] <= min(y, table.limit)


def smooth_numbers(x: int, y: int, table: FactorTable) -> np.ndarray:
    """Ascending array of the y-smooth n with 1 ≤ n ≤ x."""
    _check(x, y, table)
    if x < 1:
        return np.array([], dtype=np.int64)
    return np.flatnonzero(_smooth_mask(1, x + 1, y, table)).astype(np.int64) + 1


def psi(x: int, y: int, table: FactorTable) -> int:
    _check(x, y, table)
    if x < 1:
        return 0
    return int(np.count_nonzero(_smooth_mask(1, x + 1, y, table)))


def psi_coprime(x: int, y: int, q: int, table: FactorTable) -> int:
    if q < 1:
        raise DomainError(f"modulus must be at least 1, got {q}")
    n = smooth_numbers(x, y, table)
    if q == 1:
        return int(n.size)
    return int(np.count_nonzero(np.gcd(n, q) == 1))


def residue_counts(x: int, y: int, q: int, table: FactorTable) -> np.ndarray:
    """counts[a] = Ψ(x,y;q,a) for every residue 0 ≤ a < q."""
    if q < 1:
        raise DomainError(f"modulus must be at least 1, got {q}")
    n = smooth_numbers(x, y, table)
    return np.bincount(n % q, minlength=q).astype(np.int64)


def psi_progression(x: int, y: int, q: int, a: int, table: FactorTable) -> int:
    if q < 1:
        raise DomainError(f"modulus must be at least 1, got {q}")
    if not 0 <= a < q:
        raise DomainError(f"residue {a} outside [0, {q})")
    n = smooth_numbers(x, y, table)
    return int(np.count_nonzero(n % q == a))


def psi_short_interval(x: int, z: int, y: int, table: FactorTable) -> int:
    """Ψ(x+z,y) − Ψ(x,y), the smooth count in (x, x+z]."""
    if z < 0:
        raise DomainError(f"interval length must be non-negative, got {z}")
    _check(x + z, y, table)
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    return int(np.count_nonzero(_smooth_mask(x + 1, x + z + 1, y, table)))
