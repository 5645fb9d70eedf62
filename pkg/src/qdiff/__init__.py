"""
q-difference module for the q-series toolkit.

The Q_{d,k,i} family, the closed-form F_{d,k,i} families, product sides,
and the shared checker for their q-difference systems.
"""

from .base_family import BaseFamily, FamilyIndex
from .f_family import SUPPORTED_FAMILIES, FFamily, f_family, f_star_222
from .q_family import QFamily, product_side, q_family, q_kk_alternate
from .systems import (
    verify_alternate,
    verify_at_zero,
    verify_f_equals_q,
    verify_f_system,
    verify_product_side,
    verify_q_system,
    verify_recurrences,
)

__all__ = [
    "BaseFamily",
    "FamilyIndex",
    "SUPPORTED_FAMILIES",
    "FFamily",
    "f_family",
    "f_star_222",
    "QFamily",
    "product_side",
    "q_family",
    "q_kk_alternate",
    "verify_alternate",
    "verify_at_zero",
    "verify_f_equals_q",
    "verify_f_system",
    "verify_product_side",
    "verify_q_system",
    "verify_recurrences",
]
