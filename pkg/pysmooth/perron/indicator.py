# indicator.py -----------------------------------------------
"""Perron's formula for a single step function.

For w = threshold/v ≠ 1,

    (1/2πi) ∫_{1/2−iT}^{1/2+iT} w^s ds/s
        = (1/π) ∫_0^T √w (cos(t log w)/2 + t sin(t log w)) / (1/4 + t²) dt

approximates 1_{v < threshold} within (1/T)(1/|log w| + √w).
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from pysmooth.core.errors import DomainError

from .quadrature import power_of_two_at_least, simpson_refined

# cap on grid points evaluated per block of ratios
CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class IndicatorResult:
    approx: float
    bound: float
    quadrature_err: float
    exact: int

    @property
    def error(self) -> float:
        return abs(self.approx - self.exact)

    @property
    def within_bound(self) -> bool:
        return self.error <= self.bound + self.quadrature_err


def indicator_bound(ratio: np.ndarray, T: float) -> np.ndarray:
    """(1/T)(1/|log w| + √w)."""
    ratio = np.asarray(ratio, dtype=np.float64)
    return (1.0 / np.abs(np.log(ratio)) + np.sqrt(ratio)) / T


def indicator_nodes(max_abs_log: float, T: float) -> int:
    return power_of_two_at_least(8 * T * (max_abs_log + 1.0), floor=64)


def perron_indicator_many(
    ratios: np.ndarray, T: float, nodes: Optional[int] = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(approx, bound, quadrature_err) for every w in ``ratios``."""
    ratios = np.asarray(ratios, dtype=np.float64)
    if T < 2:
        raise DomainError(f"T must be at least 2, got {T}")
    if np.any(ratios <= 0):
        raise DomainError("indicator ratios must be positive")
    logs = np.log(ratios)
    if np.any(logs == 0):
        raise DomainError("v equals the threshold; the half-integer shift excludes this")
    if ratios.size == 0:
        empty = np.zeros(0)
        return empty, empty, empty
    nodes = indicator_nodes(float(np.max(np.abs(logs))), T) if nodes is None else nodes

    t = np.linspace(0.0, T, 2 * nodes + 1)
    kernel = 1.0 / (0.25 + t * t)
    approx = np.empty(ratios.size)
    quad = np.empty(ratios.size)
    rows = max(1, CHUNK_ELEMENTS // t.size)
    for start in range(0, ratios.size, rows):
        r = logs[start : start + rows, None]
        phase = t[None, :] * r
        values = (0.5 * np.cos(phase) + t[None, :] * np.sin(phase)) * kernel[None, :]
        fine, err = simpson_refined(values, t)
        scale = np.exp(0.5 * logs[start : start + rows]) / math.pi
        approx[start : start + rows] = scale * fine
        quad[start : start + rows] = scale * err
    return approx, indicator_bound(ratios, T), quad


def perron_indicator(
    v: float, threshold_plus_half: float, T: float, nodes: Optional[int] = None
) -> IndicatorResult:
    if v <= 0 or threshold_plus_half <= 0:
        raise DomainError(f"v and threshold must be positive, got {v}, {threshold_plus_half}")
    if v == threshold_plus_half:
        raise DomainError(f"v equals the threshold {threshold_plus_half}")
    approx, bound, quad = perron_indicator_many(
        np.array([threshold_plus_half / v]), T, nodes
    )
    return IndicatorResult(
        approx=float(approx[0]),
        bound=float(bound[0]),
        quadrature_err=float(quad[0]),
        exact=int(v < threshold_plus_half),
    )
