"""Asai gamma factors of cuspidal representations of GL_n over F_{q^2}."""

from .asai import distinction, gamma_bessel, gamma_dual, gamma_fe
from .cuspidal import CuspidalRep, list_cuspidal, new_cuspidal
from .field_tower import Tower, build_tower
from .level_zero import asai_L, epsilon_check, local_gamma_vol
from .matgroup import group_context

__version__ = "0.1.0"

__all__ = [
    "CuspidalRep",
    "Tower",
    "asai_L",
    "build_tower",
    "distinction",
    "epsilon_check",
    "gamma_bessel",
    "gamma_dual",
    "gamma_fe",
    "group_context",
    "list_cuspidal",
    "local_gamma_vol",
    "new_cuspidal",
]
