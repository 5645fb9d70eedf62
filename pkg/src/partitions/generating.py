"""
Generating functions of the B-partitions and the checks built on them.

    B_{d,k,i}(a, q) = sum_{m,n} b_{d,k,i}(m, n) a^m q^n

satisfies the same q-difference system as Q_{d,k,i}, so the two agree.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from ..core.pochhammer import div_pochhammer, poch
from ..core.series import Orders, TruncatedSeries
from ..qdiff.base_family import BaseFamily, FamilyIndex
from ..qdiff.q_family import q_family
from ..verification.report import VerificationReport, compare_series
from .counting import PartitionConstraint, b_table, counts_A, counts_B

logger = logging.getLogger(__name__)


def _univariate(counts: List[int], q_order: int) -> TruncatedSeries:
    return TruncatedSeries({(0, n): c for n, c in enumerate(counts)}, q_order)


def b_genfun(c: PartitionConstraint, a_order: Optional[int], q_order: int) -> TruncatedSeries:
    """
    Bivariate generating function of b(m, n), m counting parts.

    Args:
        c: The (d, k, i) rules.
        a_order: Largest number of parts kept (None keeps all).
        q_order: Largest size enumerated.

    Raises:
        ValueError: If the orders exceed the enumeration caps.
    """
    table = b_table(c, q_order, a_order)
    return TruncatedSeries(dict(table), q_order, a_order)


class BFamily(BaseFamily):
    """B_{d,k,i}(a, q) for i = 1..k, assembled from enumerated counts."""

    name = "B"

    def member(self, i: int, orders: Orders) -> TruncatedSeries:
        c = PartitionConstraint(self.d, self.k, i)
        return b_genfun(c, orders.a_order, orders.q_order)


def verify_B_recurrences(c: PartitionConstraint, orders: Orders) -> VerificationReport:
    """
    The q-difference system of B_{d,k,1..k} on enumerated data.

    Only c.d and c.k matter; every i of the family is checked.
    """
    return BFamily(c.d, c.k).verify_system(orders)


def gordon_rows(c: PartitionConstraint, n_max: int) -> List[str]:
    """Per-n lines "n=4: A=5 B=5 ok"."""
    a_counts = counts_A(c, n_max)
    b_counts = counts_B(c, n_max)
    return [
        f"n={n}: A={a} B={b} {'ok' if a == b else 'MISMATCH'}"
        for n, (a, b) in enumerate(zip(a_counts, b_counts))
    ]


def verify_gordon_theorem(c: PartitionConstraint, n_max: int) -> Tuple[VerificationReport, List[str]]:
    """
    A_{d,k,i}(n) = B_{d,k,i}(n) for every n <= n_max.

    Returns:
        (report, rows) where rows holds one "n=..: A=.. B=.. ok" line per n.
    """

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        yield "A=B", _univariate(counts_A(c, n_max), n_max), _univariate(counts_B(c, n_max), n_max)

    report = compare_series(f"gordon{c}", comparisons(), note=f"n<={n_max}")
    return report, gordon_rows(c, n_max)


def verify_gordon_factorization(c: PartitionConstraint, q_order: int) -> VerificationReport:
    """
    sum B_{d,k,i}(n) q^n = prod_{d does not divide j} 1/(1 - q^j) * sum B_{1,k,i}(n) q^(dn).
    """

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        lhs = _univariate(counts_B(c, q_order), q_order)
        base = PartitionConstraint(1, c.k, c.i)
        inner_order = q_order // c.d
        rhs = _univariate(counts_B(base, inner_order), inner_order).substitute(0, c.d, q_order=q_order)
        for j in range(1, q_order + 1):
            if j % c.d:
                rhs = div_pochhammer(rhs, poch(j, 1, 1))
        yield "factorization", lhs, rhs

    return compare_series(f"factorization{c}", comparisons())


def verify_refined(c: PartitionConstraint, orders: Orders) -> VerificationReport:
    """b_genfun(c) = Q_{d,k,i} as bivariate series."""

    def comparisons() -> Iterator[Tuple[str, TruncatedSeries, TruncatedSeries]]:
        idx = FamilyIndex(c.d, c.k, c.i)
        yield "B=Q", b_genfun(c, orders.a_order, orders.q_order), q_family(idx, orders)

    return compare_series(f"refined{c}", comparisons())
