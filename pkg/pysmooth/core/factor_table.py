# factor_table.py --------------------------------------------
"""Segmented sieve for the largest and smallest prime factor of every n ≤ limit.

Both arrays are indexed by n itself (index 0 is an unused zero). The sentinel
``largest[1] == smallest[1] == 1`` makes n = 1 smooth for every y ≥ 1.

Memory: two ``uint32`` arrays, i.e. 8 bytes per integer. The ceiling
``MAX_TABLE_LIMIT = 10**8`` therefore needs about 800 MB, and keeps every
entry representable in 32 bits.
"""

import logging
import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

logger = logging.getLogger(__name__)

MAX_TABLE_LIMIT = 10**8
SEGMENT_SIZE = 1 << 20


@dataclass(frozen=True, eq=False)
class FactorTable:
    limit: int
    largest: np.ndarray
    smallest: np.ndarray

    def __post_init__(self) -> None:
        for arr in (self.largest, self.smallest):
            if arr.shape != (self.limit + 1,):
                raise CapacityError(
                    f"factor array of shape {arr.shape} does not match limit {self.limit}"
                )
            arr.setflags(write=False)

    def __repr__(self) -> str:
        return f"<FactorTable limit={self.limit}>"

    def covers(self, n: int) -> bool:
        return n <= self.limit

    def require(self, n: int, what: str = "x") -> None:
        if n > self.limit:
            raise CapacityError(
                f"{what}={n} exceeds factor table limit {self.limit}"
            )

    def largest_factor(self, n: int) -> int:
        self.require(n, "n")
        return int(self.largest[n])

    def smallest_factor(self, n: int) -> int:
        self.require(n, "n")
        return int(self.smallest[n])

    def is_prime_power(self, n: int) -> bool:
        # n = p^k exactly when the extreme prime factors coincide
        return n >= 2 and self.largest[n] == self.smallest[n]

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of n by repeated division through ``smallest``."""
        self.require(n, "n")
        out: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.smallest[n])
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        return out


def base_primes(limit: int) -> np.ndarray:
    """Plain Eratosthenes up to ``limit`` (used for the sieving primes)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _sieve_segment(lo: int, hi: int, primes: np.ndarray):
    """Largest/smallest prime factor for lo ≤ n < hi, dividing out each sieving prime."""
    n = np.arange(lo, hi, dtype=np.int64)
    rest = n.copy()
    largest = np.ones(hi - lo, dtype=np.int64)
    smallest = np.zeros(hi - lo, dtype=np.int64)

    for p in primes.tolist():
        start = -(-lo // p) * p
        if start >= hi:
            continue
        sl = slice(start - lo, hi - lo, p)
        low = smallest[sl]
        low[low == 0] = p
        largest[sl] = p  # ascending p, so the last write wins
        view = rest[sl]
        view //= p
        while True:
            again = view % p == 0
            if not again.any():
                break
            view[again] //= p

    # what survives all sieving primes is a single prime above sqrt(limit)
    cofactor = rest > 1
    largest[cofactor] = rest[cofactor]
    unset = smallest == 0
    smallest[unset] = n[unset]
    return largest, smallest


def build_factor_table(limit: int, *, segment_size: int = SEGMENT_SIZE) -> FactorTable:
    try:
        limit = operator.index(limit)
    except TypeError:
        raise CapacityError(f"table limit must be an integer, got {limit!r}") from None
    if limit < 2 or limit > MAX_TABLE_LIMIT:
        raise CapacityError(
            f"table limit {limit} outside supported range [2, {MAX_TABLE_LIMIT}]"
        )
    if segment_size < 1:
        raise CapacityError(f"segment size must be positive, got {segment_size}")

    primes = base_primes(math.isqrt(limit))
    largest = np.zeros(limit + 1, dtype=np.uint32)
    smallest = np.zeros(limit + 1, dtype=np.uint32)

    for lo in range(1, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        big, small = _sieve_segment(lo, hi, primes)
        largest[lo:hi] = big
        smallest[lo:hi] = small
        logger.debug("sieved segment [%d, %d) of %d", lo, hi, limit)

    logger.info("built factor table up to %d", limit)
    return FactorTable(limit=limit, largest=largest, smallest=smallest)


def primes_up_to(limit: int, table: FactorTable) -> np.ndarray:
    """Sorted primes ≤ limit read off the table (p is prime iff largest[p] == p)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    table.require(limit, "limit")
    n = np.arange(2, limit + 1, dtype=np.int64)
    return n[table.largest[2 : limit + 1] == n]
