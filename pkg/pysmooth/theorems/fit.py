# fit.py -----------------------------------------------------
"""The largest constant c ∈ [0, 2] for which lhs ≤ rhs_shape(c) holds on
every instance. rhs_shape is decreasing in c, so the feasible set is an
interval [0, c*] and bisection finds c* to ``RESOLUTION``.
"""

import logging
from typing import Iterable, Sequence

from scipy.optimize import bisect

from pysmooth.core.errors import DomainError

from .instances import TheoremInstance, check_which

logger = logging.getLogger(__name__)

C_MAX = 2.0
RESOLUTION = 1e-4
DEFAULT_POWERS = (0.0, 1.0, 2.0)


def _excess(instances: Sequence[TheoremInstance], which: str, c: float, A: float) -> float:
    """max over instances of lhs − rhs_shape(c); feasible iff ≤ 0."""
    return max(
        inst.lhs - inst.rhs_shape(c, A) for inst in instances if inst.which == which
    )


def fit_constant(instances: Sequence[TheoremInstance], which: str, A: float = 0.0) -> float:
    """Returns C_MAX when every c is feasible and 0.0 when even c = 0 fails."""
    check_which(which)
    chosen = [inst for inst in instances if inst.which == which]
    if not chosen:
        raise DomainError(f"no {which} instances to fit")

    def excess(c: float) -> float:
        return _excess(chosen, which, c, A)

    if excess(C_MAX) <= 0:
        return C_MAX
    base = excess(0.0)
    if base > 0:
        logger.warning("%s shape fails at c = 0 on %d instances", which, len(chosen))
    if base >= 0:
        return 0.0
    c = bisect(excess, 0.0, C_MAX, xtol=RESOLUTION / 2)
    while c > 0 and excess(c) > 0:
        c = max(0.0, c - RESOLUTION)
    return float(c)


def fit_log_power(
    instances: Sequence[TheoremInstance],
    which: str,
    powers: Iterable[float] = DEFAULT_POWERS,
) -> dict[float, float]:
    """Fitted c for each log^{−A} x variant; A = 0 is the effective shape."""
    return {float(A): fit_constant(instances, which, A) for A in powers}


def fit_history(instances: Sequence[TheoremInstance], which: str) -> list[float]:
    """Fitted c over the growing prefixes of ``instances`` (non-increasing)."""
    chosen = [inst for inst in instances if inst.which == check_which(which)]
    if not chosen:
        raise DomainError(f"no {which} instances to fit")
    return [fit_constant(chosen[:k], which) for k in range(1, len(chosen) + 1)]
