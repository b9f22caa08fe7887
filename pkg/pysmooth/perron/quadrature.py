# quadrature.py ----------------------------------------------
import numpy as np
from scipy.integrate import simpson

from pysmooth.core.errors import DomainError

MIN_NODES = 16


def power_of_two_at_least(n: float, floor: int = MIN_NODES) -> int:
    target = max(float(floor), n)
    k = 1
    while k < target:
        k <<= 1
    return k


def simpson_refined(values: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Composite Simpson along the last axis on ``t`` and on every other node of ``t``.

    Callers sample on the refined grid: 2·nodes intervals for a contour of
    ``nodes``, so the self-estimate compares the nodes and 2·nodes
    resolutions. The interval count must be divisible by four. Returns
    (refined, |refined − nodes resolution|).
    """
    intervals = t.size - 1
    if intervals < MIN_NODES or intervals % 4:
        raise DomainError(f"need a multiple of 4 intervals ≥ {MIN_NODES}, got {intervals}")

    def integrate(v: np.ndarray, grid: np.ndarray) -> np.ndarray:
        if np.iscomplexobj(v):
            return simpson(v.real, x=grid, axis=-1) + 1j * simpson(v.imag, x=grid, axis=-1)
        return simpson(v, x=grid, axis=-1)

    fine = integrate(values, t)
    coarse = integrate(values[..., ::2], t[::2])
    return fine, np.abs(fine - coarse)
