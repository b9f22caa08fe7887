# buckets.py -------------------------------------------------
import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, totient

from pysmooth.core.errors import DomainError

SMALL, MEDIUM, LARGE = 0, 1, 2


@lru_cache(maxsize=None)
def primitive_count(r: int) -> int:
    """Number of primitive characters mod r (1 for r = 1, 0 for r ≡ 2 mod 4)."""
    count = 1
    for p, k in factorint(r).items():
        count *= (p - 2) if k == 1 else p ** (k - 2) * (p - 1) ** 2
    return count


@dataclass(frozen=True)
class ConductorBuckets:
    """Primitive characters of conductor r ∈ (1, Q] split into three ranges.

    (i)   r ≤ min{y^η, e^{η√log x}}
    (ii)  that cutoff < r ≤ x^η
    (iii) r > x^η
    """

    x: int
    y: int
    Q: int
    eta: float
    small_cutoff: float
    large_cutoff: float
    counts: tuple[int, int, int]
    masses: tuple[float, float, float]
    degenerate: bool

    def bucket_of(self, r: int) -> int:
        if r <= self.small_cutoff:
            return SMALL
        if r <= self.large_cutoff:
            return MEDIUM
        return LARGE

    @property
    def total(self) -> int:
        return sum(self.counts)


def bucket_cutoffs(x: int, y: int, eta: float) -> tuple[float, float]:
    if not 0 < eta < 1:
        raise DomainError(f"eta must lie in (0, 1), got {eta}")
    if x < 2 or y < 2:
        raise DomainError(f"bucket cutoffs need x, y ≥ 2; got ({x}, {y})")
    small = min(y**eta, math.exp(eta * math.sqrt(math.log(x))))
    return small, x**eta


def conductor_buckets(x: int, y: int, Q: int, eta: float) -> ConductorBuckets:
    small, large = bucket_cutoffs(x, y, eta)
    if Q < 1:
        raise DomainError(f"Q must be at least 1, got {Q}")
    counts = [0, 0, 0]
    masses = [0.0, 0.0, 0.0]
    for r in range(2, Q + 1):
        c = primitive_count(r)
        if not c:
            continue
        k = SMALL if r <= small else MEDIUM if r <= large else LARGE
        counts[k] += c
        masses[k] += c / int(totient(r))
    return ConductorBuckets(
        x=x,
        y=y,
        Q=Q,
        eta=eta,
        small_cutoff=small,
        large_cutoff=large,
        counts=tuple(counts),
        masses=tuple(masses),
        # (i) holds no integer r > 1
        degenerate=small < 2,
    )
