# sums.py ----------------------------------------------------
"""Character-weighted sums over smooth numbers and primes.

Ψ(x,y;χ) only depends on how many y-smooth n ≤ x fall into each residue
class, so every sum here folds the smooth numbers into ``residue_counts``
first and then contracts against character values.
"""

import itertools
import math
from typing import Optional

import numpy as np
from sympy import primefactors

from pysmooth.core.counting import residue_counts, smooth_numbers
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable, primes_up_to
from pysmooth.core.registry import TableRegistry

from .group import (
    CharacterGroup,
    DirichletCharacter,
    GroupRegistry,
    char_value,
    induced_from,
)

# rows of (nodes × primes) evaluated at once by l_smooth_grid
CHUNK_ELEMENTS = 1 << 22


def psi_char(x: int, y: int, chi: DirichletCharacter, table: FactorTable) -> complex:
    """Ψ(x,y;χ) = Σ_{n≤x, P(n)≤y} χ(n)."""
    counts = residue_counts(x, y, chi.modulus, table)
    return complex(chi.values() @ counts)


def char_sums(x: int, y: int, group: CharacterGroup, table: FactorTable) -> np.ndarray:
    """Ψ(x,y;χ) for every χ mod q, in ``group.characters()`` order."""
    counts = residue_counts(x, y, group.modulus, table)
    return group.value_matrix @ counts


def reconstruct_progression(
    x: int, y: int, q: int, a: int, group: CharacterGroup, table: FactorTable
) -> float:
    """(1/φ(q)) Σ_χ conj(χ(a)) Ψ(x,y;χ), which is Ψ(x,y;q,a) by orthogonality."""
    if group.modulus != q:
        raise DomainError(f"group is mod {group.modulus}, not {q}")
    if math.gcd(a, q) != 1:
        raise DomainError(f"residue {a} is not coprime to {q}")
    sums = char_sums(x, y, group, table)
    weights = np.conj(group.value_matrix[:, a % q])
    return float((weights @ sums).real / group.phi)


def _prime_values(
    chi: DirichletCharacter, y: int, table: Optional[FactorTable]
) -> tuple[np.ndarray, np.ndarray]:
    table = TableRegistry.get_table(y) if table is None else table
    table.require(y, "y")
    primes = primes_up_to(y, table)
    return primes, chi.values()[primes % chi.modulus]


def l_smooth(
    s: complex,
    chi: DirichletCharacter,
    y: int,
    table: Optional[FactorTable] = None,
) -> complex:
    """L(s,χ;y) = Π_{p≤y} (1 − χ(p) p^{−s})^{−1}."""
    return complex(l_smooth_grid(np.array([s], dtype=complex), chi, y, table)[0])


def l_smooth_grid(
    s: np.ndarray,
    chi: DirichletCharacter,
    y: int,
    table: Optional[FactorTable] = None,
) -> np.ndarray:
    """L(s,χ;y) at every point of ``s`` (all with Re s > 0)."""
    s = np.asarray(s, dtype=complex)
    if s.size and np.min(s.real) <= 0:
        raise DomainError(f"L(s, chi; y) needs Re(s) > 0, got {np.min(s.real)}")
    if y < 2:
        raise DomainError(f"L(s, chi; y) needs y ≥ 2, got {y}")
    primes, chi_p = _prime_values(chi, y, table)
    keep = chi_p != 0
    logp = np.log(primes[keep].astype(np.float64))
    chi_p = chi_p[keep]

    flat = s.ravel()
    out = np.empty(flat.size, dtype=complex)
    rows = max(1, CHUNK_ELEMENTS // max(1, logp.size))
    for start in range(0, flat.size, rows):
        block = flat[start : start + rows, None]
        terms = chi_p[None, :] * np.exp(-block * logp[None, :])
        out[start : start + rows] = np.exp(-np.sum(np.log1p(-terms), axis=1))
    return out.reshape(s.shape)


def mangoldt_char_sum(
    z: int,
    chi: DirichletCharacter,
    sigma: float,
    t: float,
    table: FactorTable,
) -> complex:
    """Σ_{n≤z} Λ(n) χ(n) n^{−σ−it}, ascending in n."""
    if not 0 <= sigma < 1:
        raise DomainError(f"sigma must lie in [0, 1), got {sigma}")
    if z < 0:
        raise DomainError(f"z must be non-negative, got {z}")
    table.require(z, "z")
    if z < 2:
        return 0j
    n = np.arange(2, z + 1)
    powers = n[table.largest[2 : z + 1] == table.smallest[2 : z + 1]]
    lam = np.log(table.smallest[powers].astype(np.float64))
    chi_n = chi.values()[powers % chi.modulus]
    s = complex(sigma, t)
    return complex(np.sum(lam * chi_n * np.exp(-s * np.log(powers.astype(np.float64)))))


def rational_distance_sum(
    y: int,
    chi: DirichletCharacter,
    alpha: float,
    t: float,
    table: Optional[FactorTable] = None,
) -> float:
    """Σ_{p≤y, p∤q} (1 − Re(χ(p) p^{−it})) / p^α; each term lies in [0, 2/p^α]."""
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if y < 2:
        return 0.0
    primes, chi_p = _prime_values(chi, y, table)
    keep = chi_p != 0
    logp = np.log(primes[keep].astype(np.float64))
    twisted = (chi_p[keep] * np.exp(-1j * t * logp)).real
    terms = np.clip(1.0 - twisted, 0.0, 2.0) * np.exp(-alpha * logp)
    return float(np.sum(terms))


def psi_char_via_primitive(
    x: int,
    y: int,
    chi: DirichletCharacter,
    table: FactorTable,
    groups: Optional[GroupRegistry] = None,
) -> complex:
    """Σ_{d | q/r, P(d)≤y} μ(d) χ*(d) Ψ(⌊x/d⌋, y; χ*) with χ* mod r inducing χ."""
    star = induced_from(chi, groups)
    cofactor = chi.modulus // star.modulus
    small = [p for p in primefactors(cofactor) if p <= y]
    total = 0j
    for size in range(len(small) + 1):
        for subset in itertools.combinations(small, size):
            d = math.prod(subset)
            weight = (-1) ** size * char_value(star, d)
            if weight != 0:
                total += weight * psi_char(x // d, y, star, table)
    return total


def smooth_char_values(
    x: int, y: int, chi: DirichletCharacter, table: FactorTable
) -> tuple[np.ndarray, np.ndarray]:
    """(n, χ(n)) over the y-smooth n ≤ x, ascending."""
    n = smooth_numbers(x, y, table)
    return n, chi.values()[n % chi.modulus]
