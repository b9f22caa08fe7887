# split.py ---------------------------------------------------
"""Factorisation of a smooth integer by revealing its prime factors.

Prime factors of N are exposed in non-increasing order, with multiplicity,
and multiplied into m until m first exceeds the split threshold X₀. The
cofactor n = N/m then satisfies P(n) ≤ p₁(m), and m/p₁(m) ≤ X₀ < m.

Splits are bucketed by the dyadic position of m above X₀ (index i) and by
the λ-adic position of p₁(m) below y (index j), λ = 1 + 1/(1000 log x).
"""

import math
from dataclasses import dataclass, replace
from typing import Optional

from .counting import smooth_numbers
from .errors import DomainError
from .factor_table import FactorTable


@dataclass(frozen=True)
class SmoothSplit:
    m: int
    n: int
    p1: int  # p₁(m), the last prime revealed
    i: Optional[int] = None
    j: Optional[int] = None

    @property
    def value(self) -> int:
        return self.m * self.n


def default_lambda(x: int) -> float:
    return 1.0 + 1.0 / (1000.0 * math.log(x))


def smooth_split(n: int, threshold: int, table: FactorTable) -> Optional[SmoothSplit]:
    """Split n = m·(n/m); ``None`` when n ≤ threshold (nothing to reveal)."""
    if n < 1:
        raise DomainError(f"cannot split n={n}")
    if threshold < 1:
        raise DomainError(f"split threshold must be at least 1, got {threshold}")
    table.require(n, "n")
    if n <= threshold:
        return None

    m, rest, p = 1, n, 1
    while m <= threshold:
        p = int(table.largest[rest])
        m *= p
        rest //= p
    return SmoothSplit(m=m, n=rest, p1=p)


def bucket_split(
    split: SmoothSplit,
    x: int,
    y: int,
    threshold: int,
    lam: Optional[float] = None,
) -> tuple[int, int]:
    """(i, j) with 2^i·X₀ < m ≤ 2^{i+1}·X₀ and y/λ^{j+1} < p₁(m) ≤ y/λ^j."""
    if not threshold < split.m <= y * threshold:
        raise DomainError(
            f"m={split.m} outside ({threshold}, {y * threshold}] for y={y}"
        )
    if split.p1 > y:
        raise DomainError(f"p1(m)={split.p1} exceeds y={y}")
    if x < 3:
        raise DomainError(f"bucketing needs x ≥ 3, got {x}")
    lam = default_lambda(x) if lam is None else lam
    if lam <= 1.0:
        raise DomainError(f"bucket ratio must exceed 1, got {lam}")

    i = 0
    while split.m > threshold << (i + 1):
        i += 1

    j = int(math.floor(math.log(y / split.p1) / math.log(lam)))
    while y / lam ** (j + 1) >= split.p1:
        j += 1
    while j > 0 and y / lam**j < split.p1:
        j -= 1
    return i, j


def n_range_class(
    split: SmoothSplit,
    x: int,
    y: int,
    threshold: int,
    table: FactorTable,
    lam: Optional[float] = None,
) -> int:
    """Which of the four cofactor ranges the split's n falls into (1..4).

    1: n ≤ x/(X₀·2^{i+1}),  P(n) ≤ y/λ^{j+1}
    2: n ≤ x/(X₀·2^{i+1}),  y/λ^{j+1} < P(n) ≤ y/λ^j
    3: n > x/(X₀·2^{i+1}),  P(n) ≤ y/λ^{j+1}
    4: n > x/(X₀·2^{i+1}),  y/λ^{j+1} < P(n) ≤ y/λ^j
    """
    if split.i is None or split.j is None:
        i, j = bucket_split(split, x, y, threshold, lam)
    else:
        i, j = split.i, split.j
    lam = default_lambda(x) if lam is None else lam
    short = split.n * threshold * 2 ** (i + 1) <= x
    low_top = table.largest_factor(split.n) <= y / lam ** (j + 1)
    return (1 if short else 3) + (0 if low_top else 1)


def split_smooth_range(
    x: int,
    y: int,
    threshold: int,
    table: FactorTable,
    lam: Optional[float] = None,
) -> list[SmoothSplit]:
    """Bucketed splits of every y-smooth N in (threshold, x], ascending in N."""
    out = []
    for value in smooth_numbers(x, y, table).tolist():
        if value <= threshold:
            continue
        split = smooth_split(value, threshold, table)
        i, j = bucket_split(split, x, y, threshold, lam)
        out.append(replace(split, i=i, j=j))
    return out
