# pysmooth/core/__init__.py
from .errors import (
    PysmoothError,
    CapacityError,
    DomainError,
    SolverError,
    InvariantViolation,
    CacheFormatError,
)
from .factor_table import (
    MAX_TABLE_LIMIT,
    FactorTable,
    build_factor_table,
    primes_up_to,
)
from .counting import (
    smooth_numbers,
    psi,
    psi_coprime,
    psi_progression,
    psi_short_interval,
    residue_counts,
)
from .split import (
    SmoothSplit,
    smooth_split,
    bucket_split,
    n_range_class,
    split_smooth_range,
    default_lambda,
)
from .cache import save_table, load_table
from .registry import TableRegistry

__all__ = [
    "PysmoothError",
    "CapacityError",
    "DomainError",
    "SolverError",
    "InvariantViolation",
    "CacheFormatError",
    "MAX_TABLE_LIMIT",
    "FactorTable",
    "build_factor_table",
    "primes_up_to",
    "smooth_numbers",
    "psi",
    "psi_coprime",
    "psi_progression",
    "psi_short_interval",
    "residue_counts",
    "SmoothSplit",
    "smooth_split",
    "bucket_split",
    "n_range_class",
    "split_smooth_range",
    "default_lambda",
    "save_table",
    "load_table",
    "TableRegistry",
]
