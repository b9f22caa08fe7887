# pysmooth/characters/__init__.py
from .group import (
    MAX_MODULUS,
    CharacterGroup,
    DirichletCharacter,
    GroupRegistry,
    default_groups,
    character_group,
    char_value,
    conductor,
    induced_from,
    least_primitive_root,
)
from .sums import (
    psi_char,
    char_sums,
    reconstruct_progression,
    l_smooth,
    l_smooth_grid,
    mangoldt_char_sum,
    rational_distance_sum,
    psi_char_via_primitive,
    smooth_char_values,
)

__all__ = [
    "MAX_MODULUS",
    "CharacterGroup",
    "DirichletCharacter",
    "GroupRegistry",
    "default_groups",
    "character_group",
    "char_value",
    "conductor",
    "induced_from",
    "least_primitive_root",
    "psi_char",
    "char_sums",
    "reconstruct_progression",
    "l_smooth",
    "l_smooth_grid",
    "mangoldt_char_sum",
    "rational_distance_sum",
    "psi_char_via_primitive",
    "smooth_char_values",
]
