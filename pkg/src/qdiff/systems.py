"""
Verification of q-difference systems and of the identities built on them.
"""

import logging
from typing import TYPE_CHECKING, Iterator, Tuple

from ..core.pochhammer import div_pochhammer, mul_pochhammer, poch
from ..core.series import A_ONE, A_ZERO, Orders, TruncatedSeries, one
from ..core.theta import theta_as_product, theta_exponents, theta_sum
from ..verification.report import VerificationReport, compare_series
from .base_family import FamilyIndex
from .f_family import FFamily, f_family, f_star_222
from .q_family import QFamily, product_side, q_family, q_kk_alternate

if TYPE_CHECKING:
    from .base_family import BaseFamily

logger = logging.getLogger(__name__)

Comparison = Tuple[str, TruncatedSeries, TruncatedSeries]


def _divide_by_shift_factor(s: TruncatedSeries, d: int) -> TruncatedSeries:
    # (aq;q)_(d-1)
    return div_pochhammer(s, poch(1, 1, d - 1, a_power=1))


def verify_recurrences(family: "BaseFamily", orders: Orders) -> VerificationReport:
    """
    Check X_1 and X_i (2 <= i <= k) of a family against its shifted members.

    a -> aq^d keeps every a-exponent and only raises q-exponents, so the
    shifted members are exact on the same window as the unshifted ones.
    """
    d, k = family.d, family.k
    logger.info(f"Checking the q-difference system of {family!r} at {orders}")

    def comparisons() -> Iterator[Comparison]:
        members = family.members(orders)
        shifted = {i: s.substitute(d, 1) for i, s in members.items()}
        yield "i=1", members[1], _divide_by_shift_factor(shifted[k], d)
        for i in range(2, k + 1):
            step = _divide_by_shift_factor(shifted[k - i + 1].shift(i - 1, (i - 1) * d), d)
            yield f"i={i}", members[i], members[i - 1] + step

    report = compare_series(f"{family.name}-system({d},{k})", comparisons(), note=f"{k} relations")
    logger.info(f"{'✓' if report.passed else '✗'} {report.target}: {report.status}")
    return report


def verify_q_system(d: int, k: int, orders: Orders) -> VerificationReport:
    """Both q-difference equations of the Q family for every admissible i."""
    return QFamily(d, k).verify_system(orders)


def verify_f_system(d: int, k: int, orders: Orders) -> VerificationReport:
    """The q-difference system of one closed-form F family."""
    return FFamily(d, k).verify_system(orders)


def verify_f_equals_q(d: int, k: int, orders: Orders) -> VerificationReport:
    """F_{d,k,i} = Q_{d,k,i} coefficientwise for i = 1..k (plus F* when (d,k) = (2,2))."""

    def comparisons() -> Iterator[Comparison]:
        for i in range(1, k + 1):
            idx = FamilyIndex(d, k, i)
            yield f"i={i}", f_family(idx, orders), q_family(idx, orders)
        if (d, k) == (2, 2):
            yield "star", f_star_222(orders), f_family(FamilyIndex(2, 2, 2), orders)

    return compare_series(f"F=Q({d},{k})", comparisons())


def verify_alternate(d: int, k: int, orders: Orders) -> VerificationReport:
    """The alternate sum for Q_{d,k,k} against the defining sum."""

    def comparisons() -> Iterator[Comparison]:
        yield "alternate", q_kk_alternate(d, k, orders), q_family(FamilyIndex(d, k, k), orders)

    return compare_series(f"alternate({d},{k})", comparisons())


def verify_at_zero(d: int, k: int, orders: Orders) -> VerificationReport:
    """Q_{d,k,i}(0, q) = 1 for every i."""

    def comparisons() -> Iterator[Comparison]:
        for i in range(1, k + 1):
            at_zero = q_family(FamilyIndex(d, k, i), orders).eval_a(A_ZERO)
            yield f"i={i}", at_zero, one(orders.q_order)

    return compare_series(f"Q(0)({d},{k})", comparisons())


def verify_product_side(idx: FamilyIndex, q_order: int) -> VerificationReport:
    """
    Q_{d,k,i}(1, q) (q;q)_inf = theta sum = triple product, and Q(1) equals
    the product side.
    """

    def comparisons() -> Iterator[Comparison]:
        at_one = q_family(idx, Orders(q_order)).eval_a(A_ONE)
        A, B = theta_exponents(idx.d, idx.k, idx.i)
        theta = theta_sum(A, B, q_order)
        yield "theta", mul_pochhammer(at_one, poch(1, 1)), theta
        yield "triple product", theta, theta_as_product(A, B, q_order)
        yield "product side", at_one, product_side(idx, q_order)

    return compare_series(f"product{idx}", comparisons())


__all__ = [
    "verify_recurrences",
    "verify_q_system",
    "verify_f_system",
    "verify_f_equals_q",
    "verify_alternate",
    "verify_at_zero",
    "verify_product_side",
]
