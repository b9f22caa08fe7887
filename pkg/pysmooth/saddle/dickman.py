# dickman.py -------------------------------------------------
"""Dickman's function ρ on a uniform grid.

ρ = 1 on [0, 1] and u·ρ′(u) = −ρ(u − 1) beyond. Each step of width h = 1/m
applies the midpoint rule

    ρ(u) = ρ(u − h) − h · ρ(u − h/2 − 1) / (u − h/2),

with ρ(u − h/2 − 1) interpolated linearly between the two grid points a
unit earlier. Increments on [k, k+1] depend only on values on [k−1, k], so
each unit block is one cumulative sum.
"""

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterator, Union

import numpy as np

from pysmooth.core.errors import DomainError

DEFAULT_STEP = 1e-4


@dataclass(frozen=True, eq=False)
class DickmanTable:
    step: float
    values: np.ndarray

    @property
    def per_unit(self) -> int:
        return int(round(1.0 / self.step))

    @property
    def u_max(self) -> float:
        return (self.values.size - 1) / self.per_unit

    @property
    def error_bound(self) -> float:
        """Advertised global error of the midpoint integration."""
        return self.step**2 * self.u_max

    def grid(self) -> np.ndarray:
        return np.arange(self.values.size) / self.per_unit

    def rows(self) -> Iterator[tuple[float, float]]:
        for u, r in zip(self.grid().tolist(), self.values.tolist()):
            yield u, r

    def write_csv(self, target: Union[str, Path, IO[str]]) -> None:
        if isinstance(target, (str, Path)):
            with Path(target).open("w", newline="") as fh:
                self.write_csv(fh)
            return
        writer = csv.writer(target, lineterminator="\n")
        writer.writerow(["u", "rho"])
        for u, r in self.rows():
            writer.writerow([repr(u), repr(r)])


def build_dickman_table(u_max: float, step: float = DEFAULT_STEP) -> DickmanTable:
    if u_max < 0:
        raise DomainError(f"u_max must be non-negative, got {u_max}")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    m = int(round(1.0 / step))
    if m < 1 or abs(m * step - 1.0) > 1e-9:
        raise DomainError(f"step {step} must be 1/m for an integer m")
    h = 1.0 / m

    size = int(math.ceil(u_max * m - 1e-9)) + 1
    values = np.ones(max(size, m + 1), dtype=np.float64)

    block = 1
    while block * m < size - 1:
        k = np.arange(block * m + 1, min((block + 1) * m, size - 1) + 1)
        delayed = 0.5 * (values[k - m] + values[k - m - 1])
        increments = -h * delayed / (k * h - h / 2)
        values[k] = values[block * m] + np.cumsum(increments)
        block += 1

    values = values[:size]
    if np.any(values <= 0):
        raise DomainError(
            f"step {step} too coarse: rho lost positivity before u={u_max}"
        )
    return DickmanTable(step=h, values=values)


def dickman_rho(u: float, table: DickmanTable) -> float:
    if u < 0:
        raise DomainError(f"rho(u) needs u ≥ 0, got {u}")
    if u > table.u_max + 1e-12:
        raise DomainError(f"u={u} beyond Dickman table range {table.u_max}")
    if u <= 1.0:
        return 1.0
    pos = u * table.per_unit
    k = min(int(pos), table.values.size - 2)
    frac = pos - k
    return float((1.0 - frac) * table.values[k] + frac * table.values[k + 1])
