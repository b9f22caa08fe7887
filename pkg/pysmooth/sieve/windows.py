# windows.py -------------------------------------------------
"""Coefficient windows a_{M+1}, …, a_{M+N} fed to the large sieve."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from pysmooth.characters.group import GroupRegistry, default_groups
from pysmooth.core.counting import smooth_numbers
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable
from pysmooth.core.registry import TableRegistry


@dataclass(frozen=True, eq=False)
class CoefficientWindow:
    M: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.M < 0:
            raise DomainError(f"window offset must be non-negative, got {self.M}")
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 1 or values.size < 1:
            raise DomainError("window needs at least one coefficient")
        if not np.all(np.isfinite(values)):
            raise DomainError("window coefficients must be finite")
        object.__setattr__(self, "values", values)

    @property
    def N(self) -> int:
        return int(self.values.size)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.M + 1, self.M + self.N + 1, dtype=np.int64)

    @property
    def norm2(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))

    def scaled(self, c: complex) -> "CoefficientWindow":
        return CoefficientWindow(M=self.M, values=self.values * c)


def random_window(
    rng: np.random.Generator, N_max: int, M_max: Optional[int] = None
) -> CoefficientWindow:
    """Gaussian complex coefficients with N uniform in [1, N_max]."""
    if N_max < 1:
        raise DomainError(f"N_max must be at least 1, got {N_max}")
    M_max = N_max if M_max is None else M_max
    N = int(rng.integers(1, N_max + 1))
    M = int(rng.integers(0, M_max + 1))
    values = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    return CoefficientWindow(M=M, values=values)


def progression_window(N: int, q: int, a: int = 1, M: int = 0) -> CoefficientWindow:
    """1 on n ≡ a (mod q), 0 elsewhere."""
    n = np.arange(M + 1, M + N + 1)
    return CoefficientWindow(M=M, values=(n % q == a % q).astype(complex))


def character_window(
    N: int, Q: int, groups: Optional[GroupRegistry] = None, M: int = 0
) -> CoefficientWindow:
    """a_n = conj(χ(n)) for the first primitive χ of the largest modulus ≤ Q that has one."""
    groups = default_groups if groups is None else groups
    for r in range(Q, 0, -1):
        primitive = groups.get(r).primitive_characters()
        if primitive:
            chi = primitive[-1].conj()
            n = np.arange(M + 1, M + N + 1)
            return CoefficientWindow(M=M, values=chi.values()[n % r])
    raise DomainError(f"no primitive character with modulus ≤ {Q}")


def smooth_window(
    N: int, y: int, table: Optional[FactorTable] = None, M: int = 0
) -> CoefficientWindow:
    """Indicator of the y-smooth n in (M, M+N]."""
    table = TableRegistry.get_table(M + N) if table is None else table
    values = np.zeros(N, dtype=complex)
    hits = smooth_numbers(M + N, y, table)
    values[hits[hits > M] - M - 1] = 1
    return CoefficientWindow(M=M, values=values)


def adversarial_windows(
    Q: int,
    N: int,
    groups: Optional[GroupRegistry] = None,
    table: Optional[FactorTable] = None,
) -> list[tuple[str, CoefficientWindow]]:
    """Windows built to push the large sieve towards equality."""
    if Q < 1 or N < 1:
        raise DomainError(f"need Q ≥ 1 and N ≥ 1, got Q={Q}, N={N}")
    y = max(2, int(np.sqrt(N)))
    return [
        ("progression", progression_window(N, max(Q, 1))),
        ("character", character_window(N, Q, groups)),
        ("smooth", smooth_window(N, y, table)),
    ]
