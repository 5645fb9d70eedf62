"""
Closed-form sum sides F_{d,k,i} for
(d, k) in {(2,2), (2,3), (2,4), (3,3), (3,4), (3,5)}.

Several printed definitions divide (a;q^3)_j by (a;q)_2n or (a;q)_(2n-1);
for n >= 1 the common factor (1 - a) is cancelled, leaving
(aq^3;q^3)_(j-1) over (aq;q)_(2n-1) or (aq;q)_(2n-2). The n = 0 term of
those families is 1, matching F(0) = 1. Numerator polynomials such as
(1 + aq^(3r) - q^(3r)) are applied by linearity: one binomial factor plus
one shifted copy.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..core.exceptions import UnsupportedParams
from ..core.pochhammer import PochhammerSpec, poch, product_term
from ..core.series import Orders, TruncatedSeries, one, series_sum
from .base_family import BaseFamily, FamilyIndex

logger = logging.getLogger(__name__)

SUPPORTED_FAMILIES: Tuple[Tuple[int, int], ...] = ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5))

# Summand builder: (n, r, orders) -> series, or None when the term vanishes.
Summand = Callable[[int, int, Orders], Optional[TruncatedSeries]]


def _double_sum(orders: Orders, summand: Summand, r_step: int, single: bool = False) -> TruncatedSeries:
    """
    Sum summand(n, r) over n >= 0 and 0 <= r <= n / r_step.

    Every summand here starts at q^(n^2 - 3) or later, so n stops once
    n^2 - 3 exceeds q_order.
    """
    parts: List[TruncatedSeries] = []
    n = 0
    while n * n - 3 <= orders.q_order:
        r_max = 0 if single else n // r_step
        for r in range(r_max + 1):
            term = summand(n, r, orders)
            if term is not None and not term.is_zero():
                parts.append(term)
        n += 1
    return series_sum(parts, orders.q_order, orders.a_order)


def _term(
    coeff: int,
    a_exp: int,
    q_exp: int,
    orders: Orders,
    numerator: Sequence[PochhammerSpec] = (),
    denominator: Sequence[PochhammerSpec] = (),
) -> Optional[TruncatedSeries]:
    if q_exp > orders.q_order:
        return None
    return product_term(coeff, a_exp, q_exp, orders.q_order, orders.a_order, numerator, denominator)


# ----------------------------------------------------------------------
# (d, k) = (2, 2)
# ----------------------------------------------------------------------


def _f221(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    return _term(1, n, 3 * n * (n + 1) // 2, o, denominator=[poch(1, 2, n + 1, a_power=1), poch(1, 1, n)])


def _f222(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    return _term(1, n, n * (3 * n - 1) // 2, o, denominator=[poch(1, 2, n, a_power=1), poch(1, 1, n)])


def _f222_star(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    return _term(1, n, n * (3 * n + 1) // 2, o, denominator=[poch(1, 2, n + 1, a_power=1), poch(1, 1, n)])


# ----------------------------------------------------------------------
# (d, k) = (2, 3)
# ----------------------------------------------------------------------


def _f23(i: int) -> Summand:
    linear, length_shift = {1: (2, 1), 2: (1, 1), 3: (0, 0)}[i]

    def summand(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
        return _term(
            1, n, n * n + linear * n, o,
            denominator=[poch(1, 2, n + length_shift, a_power=1), poch(1, 1, n)],
        )

    return summand


# ----------------------------------------------------------------------
# (d, k) = (2, 4)
# ----------------------------------------------------------------------


def _f24(i: int) -> Summand:
    def summand(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
        if i <= 2:
            q_exp, length = n * n + 2 * n + 2 * r * r + 2 * r, n + 1
        elif i == 3:
            q_exp, length = n * n + 2 * r * r + 2 * r, n
        else:
            q_exp, length = n * n + 2 * r * r, n
        term = _term(
            1, n + r, q_exp, o,
            denominator=[poch(1, 2, length, a_power=1), poch(1, 1, n - 2 * r), poch(2, 2, r)],
        )
        if term is not None and i == 2:
            term = term.mul_binomial(1, 1, 2 * r + 2)
        return term

    return summand


# ----------------------------------------------------------------------
# (d, k) = (3, 3)
# ----------------------------------------------------------------------


def _f331(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    return _term(
        (-1) ** r, n, n * n + 3 * n + 3 * r * (r - 1) // 2, o,
        numerator=[poch(3, 3, n - r, a_power=1)],
        denominator=[poch(1, 1, 2 * n + 2, a_power=1), poch(1, 1, n - 3 * r), poch(3, 3, r)],
    )


def _f332(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    if n == 0:
        return one(o.q_order, o.a_order)
    base = _term(
        (-1) ** r, n - 1, n * n + 3 * r * (r - 3) // 2, o,
        numerator=[poch(3, 3, n - r - 1, a_power=1)],
        denominator=[poch(1, 1, 2 * n - 1, a_power=1), poch(1, 1, n - 3 * r), poch(3, 3, r)],
    )
    if base is None:
        return None
    # (1 + a q^(3r) - q^(3r)) = (1 - q^(3r)) + a q^(3r)
    return base.mul_binomial(-1, 0, 3 * r) + base.shift(1, 3 * r)


def _f333(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
    if n == 0:
        return one(o.q_order, o.a_order)
    return _term(
        (-1) ** r, n, n * n + 3 * r * (r - 1) // 2, o,
        numerator=[poch(3, 3, n - r - 1, a_power=1)],
        denominator=[poch(1, 1, 2 * n - 1, a_power=1), poch(1, 1, n - 3 * r), poch(3, 3, r)],
    )


# ----------------------------------------------------------------------
# (d, k) = (3, 4)
# ----------------------------------------------------------------------


def _f34(i: int) -> Summand:
    def summand(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
        if i == 4:
            if n == 0:
                return one(o.q_order, o.a_order)
            return _term(
                1, n, n * n, o,
                numerator=[poch(3, 3, n - 1, a_power=1)],
                denominator=[poch(1, 1, 2 * n - 1, a_power=1), poch(1, 1, n)],
            )
        linear, length = {1: (3, 2 * n + 2), 2: (2, 2 * n + 2), 3: (1, 2 * n + 1)}[i]
        return _term(
            1, n, n * (n + linear), o,
            numerator=[poch(3, 3, n, a_power=1)],
            denominator=[poch(1, 1, length, a_power=1), poch(1, 1, n)],
        )

    return summand


# ----------------------------------------------------------------------
# (d, k) = (3, 5)
# ----------------------------------------------------------------------


def _f35(i: int) -> Summand:
    def summand(n: int, r: int, o: Orders) -> Optional[TruncatedSeries]:
        common_den = [poch(1, 1, n - 3 * r), poch(3, 3, r)]
        if i <= 2:
            term = _term(
                1, n + r, n * n + 3 * r * r + 3 * n + 3 * r, o,
                numerator=[poch(3, 3, n - r, a_power=1)],
                denominator=[poch(1, 1, 2 * n + 2, a_power=1)] + common_den,
            )
            if term is not None and i == 2:
                term = term.mul_binomial(1, 1, 3 * r + 3)
            return term
        if n == 0:
            return one(o.q_order, o.a_order)
        cancelled_num = [poch(3, 3, n - r - 1, a_power=1)]
        cancelled_den = [poch(1, 1, 2 * n - 1, a_power=1)] + common_den
        if i == 3:
            base = _term(
                1, n + r - 1, n * n + 3 * r * r - 3, o,
                numerator=cancelled_num, denominator=cancelled_den,
            )
            if base is None:
                return None
            # (q^(3r) + a q^(6r+3) - 1) = -(1 - q^(3r)) + a q^(6r+3)
            return (-base.mul_binomial(-1, 0, 3 * r)) + base.shift(1, 6 * r + 3)
        q_exp = n * n + 3 * r * r + (3 * r if i == 4 else 0)
        return _term(1, n + r, q_exp, o, numerator=cancelled_num, denominator=cancelled_den)

    return summand


def _summands() -> Dict[Tuple[int, int, int], Tuple[Summand, int, bool]]:
    table: Dict[Tuple[int, int, int], Tuple[Summand, int, bool]] = {
        (2, 2, 1): (_f221, 1, True),
        (2, 2, 2): (_f222, 1, True),
        (3, 3, 1): (_f331, 3, False),
        (3, 3, 2): (_f332, 3, False),
        (3, 3, 3): (_f333, 3, False),
    }
    for i in (1, 2, 3):
        table[(2, 3, i)] = (_f23(i), 1, True)
    for i in (1, 2, 3, 4):
        table[(2, 4, i)] = (_f24(i), 2, False)
        table[(3, 4, i)] = (_f34(i), 1, True)
    for i in (1, 2, 3, 4, 5):
        table[(3, 5, i)] = (_f35(i), 3, False)
    return table


_SUMMANDS = _summands()


def f_family(idx: FamilyIndex, orders: Orders) -> TruncatedSeries:
    """
    F_{d,k,i}(a, q) truncated to orders.

    Raises:
        UnsupportedParams: If (d, k) has no closed-form family here.
    """
    entry = _SUMMANDS.get((idx.d, idx.k, idx.i))
    if entry is None:
        supported = ", ".join(f"({d},{k})" for d, k in SUPPORTED_FAMILIES)
        raise UnsupportedParams(f"No F family for (d,k)=({idx.d},{idx.k}); supported: {supported}")
    summand, r_step, single = entry
    result = _double_sum(orders, summand, r_step, single)
    if not result.is_power_series():
        raise ValueError(f"F{idx} produced negative exponents; the boundary terms are wrong")
    return result


def f_star_222(orders: Orders) -> TruncatedSeries:
    """F*_{2,2,2}: same shape as F_{2,2,1} with exponent n(3n+1)/2."""
    return _double_sum(orders, _f222_star, 1, single=True)


class FFamily(BaseFamily):
    """The closed-form F_{d,k,i} families."""

    name = "F"

    def __init__(self, d: int, k: int) -> None:
        if (d, k) not in SUPPORTED_FAMILIES:
            supported = ", ".join(f"({a},{b})" for a, b in SUPPORTED_FAMILIES)
            raise UnsupportedParams(f"No F family for (d,k)=({d},{k}); supported: {supported}")
        super().__init__(d, k)

    def member(self, i: int, orders: Orders) -> TruncatedSeries:
        return f_family(self.index(i), orders)
