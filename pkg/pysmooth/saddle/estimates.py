# estimates.py -----------------------------------------------
"""Main terms that approximate Ψ(x,y)."""

import math
from typing import Optional

from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable

from .alpha import SaddlePoint, log_zeta_smooth
from .dickman import DickmanTable, dickman_rho


def _matches(x: int, y: int, sp: SaddlePoint) -> None:
    if (sp.x, sp.y) != (x, y):
        raise DomainError(
            f"saddle point solved for ({sp.x}, {sp.y}), not ({x}, {y})"
        )


def rankin_bound(x: int, y: int, sp: SaddlePoint, table: Optional[FactorTable] = None) -> float:
    """x^α ζ(α,y): every smooth n ≤ x contributes (x/n)^α ≥ 1, so Ψ(x,y) never exceeds it."""
    _matches(x, y, sp)
    return math.exp(sp.alpha * math.log(x) + log_zeta_smooth(sp.alpha, y, table))


def ht_estimate(x: int, y: int, sp: SaddlePoint, table: Optional[FactorTable] = None) -> float:
    """Saddle-point main term x^α ζ(α,y) / (α √(2π(1 + log x / y) log x log y))."""
    _matches(x, y, sp)
    logx, logy = math.log(x), math.log(y)
    spread = math.sqrt(2 * math.pi * (1 + logx / y) * logx * logy)
    return rankin_bound(x, y, sp, table) / (sp.alpha * spread)


def alpha_from_u(u: float, logy: float) -> float:
    """1 − log(u log u)/log y."""
    if u <= 1:
        raise DomainError(f"alpha approximation needs u > 1, got {u}")
    return 1.0 - math.log(u * math.log(u)) / logy


def alpha_approx(x: int, y: int) -> float:
    if x < 3 or y < 2:
        raise DomainError(f"alpha approximation needs x ≥ 3, y ≥ 2; got ({x}, {y})")
    logx = math.log(x)
    if not (logx < y and y**3 <= x):
        raise DomainError(
            f"alpha approximation needs log x < y ≤ x^(1/3); got x={x}, y={y}"
        )
    logy = math.log(y)
    return alpha_from_u(logx / logy, logy)


def hildebrand_estimate(x: int, y: int, table: DickmanTable) -> float:
    """x·ρ(u) with u = log x / log y."""
    if x < 1 or y < 2:
        raise DomainError(f"Dickman estimate needs x ≥ 1, y ≥ 2; got ({x}, {y})")
    u = math.log(x) / math.log(y)
    return x * dickman_rho(u, table)
