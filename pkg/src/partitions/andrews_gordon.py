"""
The Andrews-Gordon multisum

    sum q^(N_1^2 + ... + N_(k-1)^2 + N_i + ... + N_(k-1))
        / ((q;q)_(n_1) ... (q;q)_(n_(k-1)))

with N_j = n_j + ... + n_(k-1), enumerated as N_1 >= ... >= N_(k-1) >= 0.
"""

import logging
from typing import List

from ..core.pochhammer import poch, product_term
from ..core.series import TruncatedSeries, series_sum
from ..verification.report import VerificationReport, compare_series
from ..qdiff.base_family import FamilyIndex
from ..qdiff.q_family import product_side

logger = logging.getLogger(__name__)


def andrews_gordon_lhs(k: int, i: int, q_order: int) -> TruncatedSeries:
    """
    The (k-1)-fold sum side for modulus 2k + 1.

    Raises:
        ValueError: Unless k >= 2 and 1 <= i <= k.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= i <= k:
        raise ValueError(f"i must satisfy 1 <= i <= k={k}, got {i}")
    parts: List[TruncatedSeries] = []
    depth = k - 1

    def walk(j: int, lower: int, exponent: int, chosen: List[int]) -> None:
        # chosen holds N_(k-1), ..., N_(j+1)
        if j == 0:
            big = list(reversed(chosen))  # N_1 .. N_(k-1)
            lengths = [big[t] - (big[t + 1] if t + 1 < depth else 0) for t in range(depth)]
            parts.append(
                product_term(1, 0, exponent, q_order, denominator=[poch(1, 1, n) for n in lengths])
            )
            return
        value = lower
        while True:
            step = value * value + (value if j >= i else 0)
            # the j - 1 indices still to choose are at least value each
            if exponent + step + (j - 1) * value * value > q_order:
                return
            walk(j - 1, value, exponent + step, chosen + [value])
            value += 1

    walk(depth, 0, 0, [])
    return series_sum(parts, q_order)


def verify_andrews_gordon(k: int, i: int, q_order: int) -> VerificationReport:
    """Multisum against (q^i, q^(2k-i+1), q^(2k+1); q^(2k+1))_inf / (q;q)_inf."""

    def comparisons():
        yield "multisum", andrews_gordon_lhs(k, i, q_order), product_side(FamilyIndex(1, k, i), q_order)

    return compare_series(f"andrews-gordon({k},{i})", comparisons())
