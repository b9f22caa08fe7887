# shapes.py --------------------------------------------------
"""Right-hand sides of the averaged progression bounds, implicit constant 1.

A > 0 gives the ineffective variant, where the exponential decay term is
further divided by log^A x.
"""

import math

from pysmooth.core.errors import DomainError


def decay(x: int, y: int, c: float, A: float = 0.0) -> float:
    """e^{−cu/log²(u+1)} / log^A x + y^{−c}."""
    if x < 2 or y < 2:
        raise DomainError(f"shape needs x, y ≥ 2; got ({x}, {y})")
    if c < 0:
        raise DomainError(f"c must be non-negative, got {c}")
    logx = math.log(x)
    u = logx / math.log(y)
    return math.exp(-c * u / math.log(u + 1) ** 2) / logx**A + y ** (-c)


def bv_rhs_shape(x: int, y: int, Q: int, c: float, psi_val: float, A: float = 0.0) -> float:
    """Ψ(e^{−cu/log²(u+1)} + y^{−c}) + √Ψ·Q·log^{7/2} x."""
    return psi_val * decay(x, y, c, A) + math.sqrt(psi_val) * Q * math.log(x) ** 3.5


def bdh_rhs_shape(x: int, y: int, Q: int, c: float, psi_val: float, A: float = 0.0) -> float:
    """Ψ²(e^{−cu/log²(u+1)} + y^{−c}) + Ψ·Q."""
    return psi_val**2 * decay(x, y, c, A) + psi_val * Q


def large_conductor_shape(x: int, Q: int, eta: float, psi_val: float) -> float:
    """log^{7/2}x · √Ψ · (Q + x^{1/2−η} log² x)."""
    logx = math.log(x)
    return logx**3.5 * math.sqrt(psi_val) * (Q + x ** (0.5 - eta) * logx**2)


SHAPES = {"bv": bv_rhs_shape, "bdh": bdh_rhs_shape}
