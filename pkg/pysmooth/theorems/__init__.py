# pysmooth/theorems/__init__.py
from .lhs import (
    ModulusTerms,
    modulus_terms,
    bv_lhs,
    bdh_lhs,
    bv_char_form,
    bdh_char_form,
    char_form,
    char_form_by_bucket,
    large_conductor_lhs,
    prime_char_forms,
)
from .shapes import decay, bv_rhs_shape, bdh_rhs_shape, large_conductor_shape
from .instances import WHICH, TheoremInstance, theorem_instance, theorem_instances
from .fit import C_MAX, RESOLUTION, fit_constant, fit_log_power, fit_history

__all__ = [
    "ModulusTerms",
    "modulus_terms",
    "bv_lhs",
    "bdh_lhs",
    "bv_char_form",
    "bdh_char_form",
    "char_form",
    "char_form_by_bucket",
    "large_conductor_lhs",
    "prime_char_forms",
    "decay",
    "bv_rhs_shape",
    "bdh_rhs_shape",
    "large_conductor_shape",
    "WHICH",
    "TheoremInstance",
    "theorem_instance",
    "theorem_instances",
    "C_MAX",
    "RESOLUTION",
    "fit_constant",
    "fit_log_power",
    "fit_history",
]
