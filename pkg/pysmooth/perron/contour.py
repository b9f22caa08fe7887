# contour.py -------------------------------------------------
"""Ψ(x,y;χ) recovered from L(s,χ;y) on a vertical segment.

With x̃ = x + 1/2 the truncated Perron integral is

    (1/2πi) ∫_{α−iH/2}^{α+iH/2} L(s,χ;y) x̃^s / s ds
        = (1/2π) ∫_{−H/2}^{H/2} L(α+it,χ;y) x̃^{α+it} / (α+it) dt,

evaluated by composite Simpson on a uniform t-grid of 2·nodes intervals; the
self-estimate is the change against the nodes-interval grid.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from pysmooth.characters.group import DirichletCharacter
from pysmooth.characters.sums import l_smooth, l_smooth_grid, psi_char
from pysmooth.core.counting import psi, smooth_numbers
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable
from pysmooth.saddle.alpha import solve_alpha

from .quadrature import MIN_NODES, power_of_two_at_least, simpson_refined

logger = logging.getLogger(__name__)

DEFAULT_K = 4.0


@dataclass(frozen=True)
class ContourSpec:
    abscissa: float
    height: float
    nodes: int

    def __post_init__(self) -> None:
        if self.abscissa <= 0:
            raise DomainError(f"abscissa must be positive, got {self.abscissa}")
        if self.height <= 0:
            raise DomainError(f"height must be positive, got {self.height}")
        if self.nodes < MIN_NODES or self.nodes % 4:
            raise DomainError(
                f"nodes must be a multiple of 4 and at least {MIN_NODES}, got {self.nodes}"
            )

    @classmethod
    def for_height(
        cls,
        height: float,
        x: int,
        y: int,
        *,
        abscissa: Optional[float] = None,
        table: Optional[FactorTable] = None,
    ) -> "ContourSpec":
        """Segment at the saddle point, with enough nodes to resolve x^{it} and p^{−it}."""
        if abscissa is None:
            abscissa = solve_alpha(x, y, table=table).alpha
        nodes = power_of_two_at_least(4 * height * (math.log(x) + math.log(y)))
        return cls(abscissa=abscissa, height=float(height), nodes=nodes)

    def grid(self, refine: int = 1) -> np.ndarray:
        intervals = self.nodes * refine
        return np.linspace(-self.height / 2, self.height / 2, intervals + 1)


@dataclass(frozen=True)
class PerronResult:
    approx: complex
    quadrature_err: float


@dataclass(frozen=True)
class TruncationBudget:
    total: float
    contour_term: float  # x^α L(α,χ₀;y)/√H
    window_count: int  # smooth n coprime to q with |n − x̃| ≤ x/√H
    psi_scaled: int  # Ψ(x/√H, y)
    K: float


@dataclass(frozen=True)
class SweepPoint:
    height: float
    approx: complex
    exact: complex
    error: float
    quadrature_err: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.error <= self.budget + self.quadrature_err


def perron_psi_char(
    x: int,
    y: int,
    chi: DirichletCharacter,
    contour: ContourSpec,
    table: FactorTable,
) -> PerronResult:
    table.require(x)
    table.require(y, "y")
    x_tilde = x + 0.5
    t = contour.grid(refine=2)
    s = contour.abscissa + 1j * t
    integrand = l_smooth_grid(s, chi, y, table) * np.exp(s * math.log(x_tilde)) / s
    value, err = simpson_refined(integrand, t)
    approx = complex(value) / (2 * math.pi)
    quadrature_err = float(err) / (2 * math.pi)
    logger.debug(
        "perron x=%d y=%d q=%d H=%g nodes=%d -> %r (quad err %.2e)",
        x, y, chi.modulus, contour.height, contour.nodes, approx, quadrature_err,
    )
    return PerronResult(approx=approx, quadrature_err=quadrature_err)


def truncation_budget(
    x: int,
    y: int,
    chi: DirichletCharacter,
    height: float,
    table: FactorTable,
    K: float = DEFAULT_K,
    alpha: Optional[float] = None,
) -> TruncationBudget:
    """K·(1 + x^α L(α,χ₀;y)/√H + #{smooth n, (n,q)=1, |n − x̃| ≤ x/√H})."""
    if height <= 0:
        raise DomainError(f"height must be positive, got {height}")
    alpha = solve_alpha(x, y, table=table).alpha if alpha is None else alpha
    root = math.sqrt(height)
    principal = chi.group.principal()
    contour_term = x**alpha * abs(l_smooth(alpha, principal, y, table)) / root

    x_tilde = x + 0.5
    reach = x / root
    hi = int(math.floor(x_tilde + reach))
    table.require(hi, "x + x/sqrt(H)")
    n = smooth_numbers(hi, y, table)
    near = n[np.abs(n - x_tilde) <= reach]
    window_count = int(np.count_nonzero(np.gcd(near, chi.modulus) == 1))

    total = K * (1.0 + contour_term + window_count)
    return TruncationBudget(
        total=total,
        contour_term=contour_term,
        window_count=window_count,
        psi_scaled=psi(int(x / root), y, table),
        K=K,
    )


def perron_sweep(
    x: int,
    y: int,
    chi: DirichletCharacter,
    heights: Iterable[float],
    table: FactorTable,
    K: float = DEFAULT_K,
) -> list[SweepPoint]:
    """Reconstruction error of the contour integral at each height."""
    sp = solve_alpha(x, y, table=table)
    exact = psi_char(x, y, chi, table)
    out = []
    for height in heights:
        contour = ContourSpec.for_height(height, x, y, abscissa=sp.alpha)
        result = perron_psi_char(x, y, chi, contour, table)
        budget = truncation_budget(x, y, chi, height, table, K, alpha=sp.alpha)
        out.append(
            SweepPoint(
                height=float(height),
                approx=result.approx,
                exact=exact,
                error=abs(result.approx - exact),
                quadrature_err=result.quadrature_err,
                budget=budget.total,
            )
        )
    return out
