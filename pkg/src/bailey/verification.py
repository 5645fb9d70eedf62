"""
Consistency checks for the Bailey-pair constructions.
"""

import logging
from typing import Iterator, Optional, Tuple

from ..core.series import A_ONE, Orders, TruncatedSeries
from ..core.theta import theta_sum
from ..core.exponents import HalfExponent
from ..verification.report import VerificationReport, compare_series
from .closed_forms import beta_closed
from .lemma import BetaSource, Transform, alpha_side, insert
from .pairs import BetaSequence
from .params import DKParams

logger = logging.getLogger(__name__)


def verify_bailey_pair(
    params: DKParams,
    n_max: int,
    orders: Orders,
    closed: Optional[BetaSource] = None,
) -> VerificationReport:
    """
    Compare definitional and closed-form beta_n for n = 0..n_max.

    Args:
        params: A (d, k) pair with a closed form.
        n_max: Largest index checked.
        orders: Truncation bounds.
        closed: Replacement for beta_closed, used to inject faults.

    Returns:
        A report whose divergence location is "n=<index>" on failure.

    Raises:
        UnsupportedParams: If no closed form exists and none is given.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    closed = closed or beta_closed
    definitional = BetaSequence(params, orders)

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        for n in range(n_max + 1):
            yield f"n={n}", definitional[n], closed(params, n, orders)

    report = compare_series(f"bailey{params}", comparisons(), note=f"n<={n_max}")
    logger.info(f"{'✓' if report.passed else '✗'} Bailey pair {params}: {report.status}")
    return report


def verify_insertion(transform: Transform, params: DKParams, orders: Orders, beta_source: str = "definitional") -> VerificationReport:
    """Check that both sides of a corollary agree for the (d, k) pair."""
    transform = Transform(transform)

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        lhs, rhs = insert(transform, params, orders, beta_source=beta_source)
        yield transform.value, lhs, rhs

    return compare_series(f"{transform.value}{params}", comparisons(), note=f"beta={beta_source}")


def verify_pentagonal(q_order: int) -> VerificationReport:
    """The (1,1) pair through WBL at a = 1 against Euler's pentagonal series."""

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        series = alpha_side(Transform.WBL, DKParams(1, 1), Orders(q_order)).eval_a(A_ONE)
        yield "alpha side", series, theta_sum(HalfExponent(3), HalfExponent(1), q_order)

    return compare_series("pentagonal", comparisons())
