# separation.py ----------------------------------------------
"""Separate m and n in the split sum with two Perron weights.

Every y-smooth N in (X₀, x] is m·n with m > X₀ ≥ m/p₁(m) and
P(n) ≤ p₁(m), where p₁(m) is the smallest prime of m. Hence

    Σ_{X₀<N≤x} χ(N) 1_{P(N)≤y} = Σ_m χ(m) Σ_n χ(n) 1_{mn<x̃} 1_{P(n)<p₁(m)+1/2},

and both indicators are replaced by their contour integrals on
Re s = 1/2, |Im s| ≤ T. With approximations within b₁ and b₂ of the
0/1 values, each product is within b₁ + b₂ + b₁b₂.
"""

import logging
from dataclasses import dataclass

import numpy as np

from pysmooth.characters.group import DirichletCharacter
from pysmooth.characters.sums import psi_char
from pysmooth.core.counting import smooth_numbers
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable

from .indicator import perron_indicator_many

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparationResult:
    exact: complex
    assembled: complex
    accumulated_bound: float
    pairs: int

    @property
    def error(self) -> float:
        return abs(self.assembled - self.exact)

    @property
    def holds(self) -> bool:
        return self.error <= self.accumulated_bound


def split_heads(x: int, y: int, threshold: int, table: FactorTable) -> np.ndarray:
    """The m ≤ x that occur as the revealed part of a split: y-smooth, m > X₀ ≥ m/p₁(m)."""
    m = smooth_numbers(x, y, table)
    m = m[m > threshold]
    return m[m // table.smallest[m] <= threshold]


def separation_check(
    x: int,
    y: int,
    threshold: int,
    chi: DirichletCharacter,
    T: float,
    table: FactorTable,
) -> SeparationResult:
    if not 1 <= threshold < x:
        raise DomainError(f"threshold must lie in [1, x), got {threshold} for x={x}")
    exact = psi_char(x, y, chi, table) - psi_char(threshold, y, chi, table)

    heads = split_heads(x, y, threshold, table)
    tails = smooth_numbers(x // (threshold + 1), y, table)
    values = chi.values()
    chi_m = values[heads % chi.modulus]
    chi_n = values[tails % chi.modulus]
    keep_m, keep_n = chi_m != 0, chi_n != 0
    heads, chi_m = heads[keep_m], chi_m[keep_m]
    tails, chi_n = tails[keep_n], chi_n[keep_n]
    if heads.size == 0 or tails.size == 0:
        return SeparationResult(exact=exact, assembled=0j, accumulated_bound=0.0, pairs=0)

    # size weights over the distinct products mn
    products = np.multiply.outer(heads, tails)
    distinct, where = np.unique(products, return_inverse=True)
    size_w, size_b, size_q = perron_indicator_many((x + 0.5) / distinct, T)
    size_w, size_b = size_w[where].reshape(products.shape), (size_b + size_q)[
        where
    ].reshape(products.shape)

    # top-prime weights over the distinct (p₁(m), P(n)) pairs
    p1 = table.smallest[heads].astype(np.int64)
    top = table.largest[tails].astype(np.int64)
    p1_vals, p1_idx = np.unique(p1, return_inverse=True)
    top_vals, top_idx = np.unique(top, return_inverse=True)
    ratio = (p1_vals[:, None] + 0.5) / top_vals[None, :]
    prime_w, prime_b, prime_q = perron_indicator_many(ratio.ravel(), T)
    prime_w = prime_w.reshape(ratio.shape)[np.ix_(p1_idx, top_idx)]
    prime_b = (prime_b + prime_q).reshape(ratio.shape)[np.ix_(p1_idx, top_idx)]

    coeff = np.multiply.outer(chi_m, chi_n)
    assembled = complex(np.sum(coeff * size_w * prime_w))
    per_pair = size_b + prime_b + size_b * prime_b
    bound = float(np.sum(np.abs(coeff) * per_pair))
    logger.debug(
        "separation x=%d y=%d X0=%d T=%g: %d pairs, error %.3e, bound %.3e",
        x, y, threshold, T, products.size, abs(assembled - exact), bound,
    )
    return SeparationResult(
        exact=exact, assembled=assembled, accumulated_bound=bound, pairs=int(products.size)
    )
