# local.py ---------------------------------------------------
"""How Ψ(x,y) reacts to small moves in x and y."""

import math
from typing import Optional

from pysmooth.core.counting import psi, psi_short_interval
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable

from .alpha import SaddlePoint


def doubling_ratio(x: int, y: int, table: FactorTable) -> float:
    """Ψ(2x,y)/Ψ(x,y)."""
    if x < 1:
        raise DomainError(f"doubling ratio needs x ≥ 1, got {x}")
    return psi(2 * x, y, table) / psi(x, y, table)


def perturbed_y(x: int, y: int) -> int:
    if x < 3:
        raise DomainError(f"perturbed y needs x ≥ 3, got {x}")
    return int(math.floor(y * (1.0 + 1.0 / math.log(x))))


def perturbed_y_ratio(x: int, y: int, table: FactorTable) -> Optional[float]:
    """Ψ(x, ⌊y(1+1/log x)⌋)/Ψ(x,y), or None when the floor does not move y."""
    y2 = perturbed_y(x, y)
    if y2 == y:
        return None
    return psi(x, y2, table) / psi(x, y, table)


def short_interval_ratio(
    x: int, z: int, y: int, sp: SaddlePoint, table: FactorTable
) -> float:
    """(Ψ(x+z,y) − Ψ(x,y)) / (2^{log(x/z)/log y} (z/x)^α Ψ(x,y))."""
    if not 1 <= z <= x:
        raise DomainError(f"interval length must lie in [1, x], got z={z}, x={x}")
    if sp.y != y:
        raise DomainError(f"saddle point solved for y={sp.y}, not {y}")
    scale = 2.0 ** (math.log(x / z) / math.log(y)) * (z / x) ** sp.alpha
    return psi_short_interval(x, z, y, table) / (scale * psi(x, y, table))


def sublinearity_ratio(x: int, z: int, y: int, table: FactorTable) -> float:
    """(Ψ(x+z,y) − Ψ(x,y)) / Ψ(z,y)."""
    if not 1 <= z <= x:
        raise DomainError(f"interval length must lie in [1, x], got z={z}, x={x}")
    return psi_short_interval(x, z, y, table) / psi(z, y, table)
