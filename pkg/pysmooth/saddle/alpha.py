# alpha.py ---------------------------------------------------
"""Saddle point α(x,y) and the smooth Euler product ζ(s,y).

α is the unique positive root of

    f(α) = Σ_{p≤y} log p / (p^α − 1) − log x,

and f is strictly decreasing on (0, ∞). The solver brackets the root
starting from [0.01/log x, 4]: the lower end is divided by 10 while
f(lo) ≤ 0 (never below 1e−9) and the upper end doubled while f(hi) ≥ 0
(never above 64). The bracket is then bisected to machine precision.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from pysmooth.core.errors import DomainError, SolverError
from pysmooth.core.factor_table import FactorTable, primes_up_to
from pysmooth.core.registry import TableRegistry

logger = logging.getLogger(__name__)

ALPHA_FLOOR = 1e-9
ALPHA_CEILING = 64.0
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class SaddlePoint:
    alpha: float
    residual: float
    x: int
    y: int


def prime_logs(y: int, table: Optional[FactorTable] = None) -> np.ndarray:
    """log p for every prime p ≤ y, from ``table`` or the shared registry."""
    table = TableRegistry.get_table(y) if table is None else table
    table.require(y, "y")
    return np.log(primes_up_to(y, table).astype(np.float64))


def saddle_function(alpha: float, logp: np.ndarray, logx: float) -> float:
    return float(np.sum(logp / np.expm1(alpha * logp))) - logx


def solve_alpha(
    x: int,
    y: int,
    tol: float = DEFAULT_TOL,
    table: Optional[FactorTable] = None,
) -> SaddlePoint:
    if x < 3:
        raise DomainError(f"saddle point needs x ≥ 3, got {x}")
    if y < 2:
        raise DomainError(f"saddle point needs y ≥ 2, got {y}")
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    logp = prime_logs(y, table)
    logx = math.log(x)

    def f(a: float) -> float:
        return saddle_function(a, logp, logx)

    lo, hi = 0.01 / logx, 4.0
    while f(lo) <= 0 and lo > ALPHA_FLOOR:
        lo = max(lo / 10, ALPHA_FLOOR)
    while f(hi) >= 0 and hi < ALPHA_CEILING:
        hi = min(hi * 2, ALPHA_CEILING)
    if not f(lo) > 0 > f(hi):
        raise SolverError(
            f"no bracket for alpha({x}, {y}) within [{ALPHA_FLOOR}, {ALPHA_CEILING}]"
        )

    alpha = bisect(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    residual = abs(f(alpha))
    if residual > tol:
        raise SolverError(
            f"alpha({x}, {y}) = {alpha!r} leaves residual {residual:.3e} > {tol:.1e}"
        )
    logger.debug("alpha(%d, %d) = %.15f residual %.2e", x, y, alpha, residual)
    return SaddlePoint(alpha=float(alpha), residual=residual, x=x, y=y)


def log_zeta_smooth(s: float, y: int, table: Optional[FactorTable] = None) -> float:
    if s <= 0:
        raise DomainError(f"zeta(s, y) needs s > 0, got {s}")
    if y < 2:
        raise DomainError(f"zeta(s, y) needs y ≥ 2, got {y}")
    logp = prime_logs(y, table)
    return float(-np.sum(np.log1p(-np.exp(-s * logp))))


def zeta_smooth(s: float, y: int, table: Optional[FactorTable] = None) -> float:
    """Π_{p≤y} (1 − p^{−s})^{−1}."""
    return math.exp(log_zeta_smooth(s, y, table))
