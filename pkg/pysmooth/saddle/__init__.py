# pysmooth/saddle/__init__.py
from .alpha import (
    SaddlePoint,
    solve_alpha,
    saddle_function,
    prime_logs,
    log_zeta_smooth,
    zeta_smooth,
)
from .dickman import DEFAULT_STEP, DickmanTable, build_dickman_table, dickman_rho
from .estimates import (
    rankin_bound,
    ht_estimate,
    alpha_approx,
    alpha_from_u,
    hildebrand_estimate,
)
from .local import (
    doubling_ratio,
    perturbed_y,
    perturbed_y_ratio,
    short_interval_ratio,
    sublinearity_ratio,
)

__all__ = [
    "SaddlePoint",
    "solve_alpha",
    "saddle_function",
    "prime_logs",
    "log_zeta_smooth",
    "zeta_smooth",
    "DEFAULT_STEP",
    "DickmanTable",
    "build_dickman_table",
    "dickman_rho",
    "rankin_bound",
    "ht_estimate",
    "alpha_approx",
    "alpha_from_u",
    "hildebrand_estimate",
    "doubling_ratio",
    "perturbed_y",
    "perturbed_y_ratio",
    "short_interval_ratio",
    "sublinearity_ratio",
]
