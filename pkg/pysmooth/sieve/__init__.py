# pysmooth/sieve/__init__.py
from .windows import (
    CoefficientWindow,
    random_window,
    progression_window,
    character_window,
    smooth_window,
    adversarial_windows,
)
from .large_sieve import (
    SieveCheck,
    TrialSummary,
    large_sieve_lhs,
    large_sieve_rhs,
    large_sieve_check,
    large_sieve_trials,
)
from .buckets import (
    SMALL,
    MEDIUM,
    LARGE,
    ConductorBuckets,
    bucket_cutoffs,
    conductor_buckets,
    primitive_count,
)

__all__ = [
    "CoefficientWindow",
    "random_window",
    "progression_window",
    "character_window",
    "smooth_window",
    "adversarial_windows",
    "SieveCheck",
    "TrialSummary",
    "large_sieve_lhs",
    "large_sieve_rhs",
    "large_sieve_check",
    "large_sieve_trials",
    "SMALL",
    "MEDIUM",
    "LARGE",
    "ConductorBuckets",
    "bucket_cutoffs",
    "conductor_buckets",
    "primitive_count",
]
