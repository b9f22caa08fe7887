# lhs.py -----------------------------------------------------
"""Left-hand sides and character forms, one modulus at a time.

For each q ≤ Q the y-smooth n ≤ x are folded into residue classes once;
the progression errors and the character sums Ψ(x,y;χ) are both read off
those counts. Per-q work may run on a thread pool; results are reduced in
ascending q.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, TypeVar

import numpy as np

from pysmooth.characters.group import GroupRegistry, default_groups
from pysmooth.core.counting import smooth_numbers
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable
from pysmooth.sieve.buckets import LARGE, MEDIUM, SMALL, bucket_cutoffs

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class ModulusTerms:
    q: int
    phi: int
    psi_q: int
    max_error: float  # max over coprime a of |Ψ(x,y;q,a) − Ψ_q/φ(q)|
    square_error: float  # Σ over coprime a of the squares
    sums: np.ndarray  # Ψ(x,y;χ) in characters() order
    conductors: np.ndarray

    @property
    def nonprincipal(self) -> np.ndarray:
        # only the principal character has conductor 1
        return self.conductors > 1


def ordered_map(fn: Callable[[int], T], qs: range, threads: int = 1) -> list[T]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, qs))
    return [fn(q) for q in qs]


def modulus_terms(
    x: int,
    y: int,
    Q: int,
    table: FactorTable,
    groups: Optional[GroupRegistry] = None,
    *,
    threads: int = 1,
) -> list[ModulusTerms]:
    if Q < 1:
        raise DomainError(f"Q must be at least 1, got {Q}")
    groups = default_groups if groups is None else groups
    smooth = smooth_numbers(x, y, table)

    def one(q: int) -> ModulusTerms:
        group = groups.get(q)
        counts = np.bincount(smooth % q, minlength=q).astype(np.int64)
        coprime = counts[group.coprime]
        psi_q = int(coprime.sum())
        deviation = coprime - psi_q / group.phi
        return ModulusTerms(
            q=q,
            phi=group.phi,
            psi_q=psi_q,
            max_error=float(np.max(np.abs(deviation))),
            square_error=float(np.sum(deviation**2)),
            sums=group.value_matrix @ counts,
            conductors=group.conductors,
        )

    terms = ordered_map(one, range(1, Q + 1), threads)
    logger.debug("folded %d smooth numbers over q ≤ %d", smooth.size, Q)
    return terms


def bv_lhs(
    x: int,
    y: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> float:
    return float(sum(t.max_error for t in modulus_terms(x, y, Q, table, groups, threads=threads)))


def bdh_lhs(
    x: int,
    y: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> float:
    return float(
        sum(t.square_error for t in modulus_terms(x, y, Q, table, groups, threads=threads))
    )


def char_form(terms: list[ModulusTerms], power: int) -> float:
    """Σ_q (1/φ(q)) Σ_{χ≠χ₀} |Ψ(x,y;χ)|^power."""
    return float(
        sum(np.sum(np.abs(t.sums[t.nonprincipal]) ** power) / t.phi for t in terms)
    )


def bv_char_form(
    x: int,
    y: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> float:
    return char_form(modulus_terms(x, y, Q, table, groups, threads=threads), 1)


def bdh_char_form(
    x: int,
    y: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> float:
    return char_form(modulus_terms(x, y, Q, table, groups, threads=threads), 2)


def char_form_by_bucket(
    x: int,
    y: int,
    Q: int,
    eta: float,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> tuple[float, float, float]:
    """The BV character form split by the conductor range of each χ."""
    small, large = bucket_cutoffs(x, y, eta)
    parts = [0.0, 0.0, 0.0]
    for t in modulus_terms(x, y, Q, table, groups, threads=threads):
        mask = t.nonprincipal
        cond = t.conductors[mask]
        mags = np.abs(t.sums[mask]) / t.phi
        parts[SMALL] += float(np.sum(mags[cond <= small]))
        parts[MEDIUM] += float(np.sum(mags[(cond > small) & (cond <= large)]))
        parts[LARGE] += float(np.sum(mags[cond > large]))
    return parts[SMALL], parts[MEDIUM], parts[LARGE]


def large_conductor_lhs(
    x: int,
    y: int,
    Q: int,
    eta: float,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> float:
    """Σ_{x^η ≤ q ≤ Q} (1/φ(q)) Σ_{χ mod q, cond(χ) ≥ x^η} |Ψ(x,y;χ)|."""
    _, cutoff = bucket_cutoffs(x, y, eta)
    total = 0.0
    for t in modulus_terms(x, y, Q, table, groups, threads=threads):
        if t.q < cutoff:
            continue
        mask = t.conductors >= cutoff
        total += float(np.sum(np.abs(t.sums[mask]))) / t.phi
    return total


def prime_char_forms(
    x: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> tuple[float, float]:
    """Σ_q (1/φ(q)) Σ_{χ≠χ₀} |Σ_{n≤x} Λ(n)χ(n)|, and the same with squares."""
    if Q < 1:
        raise DomainError(f"Q must be at least 1, got {Q}")
    table.require(x)
    groups = default_groups if groups is None else groups
    n = np.arange(2, x + 1)
    powers = n[table.largest[2 : x + 1] == table.smallest[2 : x + 1]] if x >= 2 else n
    lam = np.log(table.smallest[powers].astype(np.float64))

    def one(q: int) -> tuple[float, float]:
        group = groups.get(q)
        if group.phi == 1:
            return 0.0, 0.0
        folded = np.bincount(powers % q, weights=lam, minlength=q)
        sums = group.value_matrix @ folded
        mags = np.abs(sums[group.conductors > 1])
        return float(np.sum(mags)) / group.phi, float(np.sum(mags**2)) / group.phi

    parts = ordered_map(one, range(1, Q + 1), threads)
    return float(sum(p[0] for p in parts)), float(sum(p[1] for p in parts))
