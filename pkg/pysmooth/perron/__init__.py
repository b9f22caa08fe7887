# pysmooth/perron/__init__.py
from .quadrature import power_of_two_at_least, simpson_refined
from .contour import (
    DEFAULT_K,
    ContourSpec,
    PerronResult,
    TruncationBudget,
    SweepPoint,
    perron_psi_char,
    truncation_budget,
    perron_sweep,
)
from .indicator import (
    IndicatorResult,
    indicator_bound,
    perron_indicator,
    perron_indicator_many,
)
from .separation import SeparationResult, separation_check, split_heads

__all__ = [
    "power_of_two_at_least",
    "simpson_refined",
    "DEFAULT_K",
    "ContourSpec",
    "PerronResult",
    "TruncationBudget",
    "SweepPoint",
    "perron_psi_char",
    "truncation_budget",
    "perron_sweep",
    "IndicatorResult",
    "indicator_bound",
    "perron_indicator",
    "perron_indicator_many",
    "SeparationResult",
    "separation_check",
    "split_heads",
]
