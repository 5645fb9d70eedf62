"""
Bailey module for the q-series toolkit.

The parametrized (d, k) Bailey pair, its closed-form betas, and the three
corollary transforms of Bailey's lemma.
"""

from .closed_forms import CLOSED_FORMS, beta_closed, has_closed_form
from .lemma import Insertion, Transform, alpha_side, beta_side, index_cutoff, insert
from .pairs import AlphaSequence, BetaSequence, alpha, beta_definitional
from .params import SUPPORTED_PAIRS, DKParams
from .verification import verify_bailey_pair, verify_insertion, verify_pentagonal

__all__ = [
    "CLOSED_FORMS",
    "beta_closed",
    "has_closed_form",
    "Insertion",
    "Transform",
    "alpha_side",
    "beta_side",
    "index_cutoff",
    "insert",
    "AlphaSequence",
    "BetaSequence",
    "alpha",
    "beta_definitional",
    "SUPPORTED_PAIRS",
    "DKParams",
    "verify_bailey_pair",
    "verify_insertion",
    "verify_pentagonal",
]
