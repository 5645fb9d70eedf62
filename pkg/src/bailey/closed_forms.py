"""
Closed forms for beta of the supported (d, k) pairs.

Each closed form is an independent construction of the same beta the
pair relation defines; verify_bailey_pair compares the two. Forms whose
printed denominator is (a;q)_2n or (a;q)_4m share a factor (1 - a) with a
numerator (a;q^3)_j or (a;q^4)_j; that factor is cancelled before any
division, so every division is by a q-adic unit.
"""

import logging
from typing import Callable, Dict, List, Tuple

from ..core.exceptions import UnsupportedParams
from ..core.series import Orders, TruncatedSeries, one, series_sum, zero
from ..core.pochhammer import poch, product_term
from .params import DKParams

logger = logging.getLogger(__name__)

ClosedForm = Callable[[int, Orders], TruncatedSeries]


def _beta_11(n: int, orders: Orders) -> TruncatedSeries:
    # Unit pair: beta_n = delta_{n,0}.
    if n == 0:
        return one(orders.q_order, orders.a_order)
    return zero(orders.q_order, orders.a_order)


def _beta_12(n: int, orders: Orders) -> TruncatedSeries:
    return product_term(1, 0, 0, orders.q_order, orders.a_order, denominator=[poch(1, 1, n)])


def _beta_22(n: int, orders: Orders) -> TruncatedSeries:
    return product_term(
        1,
        0,
        n * (n - 1) // 2,
        orders.q_order,
        orders.a_order,
        denominator=[poch(1, 2, n, a_power=1), poch(1, 1, n)],
    )


def _beta_23(n: int, orders: Orders) -> TruncatedSeries:
    return product_term(
        1, 0, 0, orders.q_order, orders.a_order,
        denominator=[poch(1, 2, n, a_power=1), poch(1, 1, n)],
    )


def _beta_24(n: int, orders: Orders) -> TruncatedSeries:
    parts: List[TruncatedSeries] = []
    for r in range(n // 2 + 1):
        parts.append(
            product_term(
                1,
                r,
                2 * r * r,
                orders.q_order,
                orders.a_order,
                denominator=[poch(1, 2, n, a_power=1), poch(2, 2, r), poch(1, 1, n - 2 * r)],
            )
        )
    return series_sum(parts, orders.q_order, orders.a_order)


def _beta_21(n: int, orders: Orders) -> TruncatedSeries:
    parts: List[TruncatedSeries] = []
    for r in range(n // 2 + 1):
        parts.append(
            product_term(
                (-1) ** r,
                -r,
                n * (n - 1) // 2 + r * r - 2 * n * r,
                orders.q_order,
                orders.a_order,
                denominator=[poch(1, 2, n, a_power=1), poch(2, 2, r), poch(1, 1, n - 2 * r)],
            )
        )
    return series_sum(parts, orders.q_order, orders.a_order)


def _beta_3x(n: int, orders: Orders, bivariate_sum: bool) -> TruncatedSeries:
    if n == 0:
        return one(orders.q_order, orders.a_order)
    parts: List[TruncatedSeries] = []
    for r in range(n // 3 + 1):
        if bivariate_sum:
            sign, a_exp, q_exp = 1, r, 3 * r * r
        else:
            sign, a_exp, q_exp = (-1) ** r, 0, 3 * r * (r - 1) // 2
        parts.append(
            product_term(
                sign,
                a_exp,
                q_exp,
                orders.q_order,
                orders.a_order,
                numerator=[poch(3, 3, n - r - 1, a_power=1)],
                denominator=[poch(1, 1, 2 * n - 1, a_power=1), poch(3, 3, r), poch(1, 1, n - 3 * r)],
            )
        )
    return series_sum(parts, orders.q_order, orders.a_order)


def _beta_33(n: int, orders: Orders) -> TruncatedSeries:
    return _beta_3x(n, orders, bivariate_sum=False)


def _beta_35(n: int, orders: Orders) -> TruncatedSeries:
    return _beta_3x(n, orders, bivariate_sum=True)


def _beta_34(n: int, orders: Orders) -> TruncatedSeries:
    if n == 0:
        return one(orders.q_order, orders.a_order)
    return product_term(
        1,
        0,
        0,
        orders.q_order,
        orders.a_order,
        numerator=[poch(3, 3, n - 1, a_power=1)],
        denominator=[poch(1, 1, 2 * n - 1, a_power=1), poch(1, 1, n)],
    )


def _beta_46(n: int, orders: Orders) -> TruncatedSeries:
    if n == 0:
        return one(orders.q_order, orders.a_order)
    m, odd = divmod(n, 2)
    parts: List[TruncatedSeries] = []
    for r in range(m + 1):
        sign = (-1) ** (m + r)
        if odd:
            q_exp = r * r - m * m + r - 2 * m - 2 * m * r
            numerator = [poch(4, 4, m + r, a_power=1)]
            denominator = [poch(1, 1, 4 * m + 1, a_power=1), poch(1, 1, 2 * r + 1), poch(2, 2, m - r)]
        else:
            q_exp = r * r - m * m + r - 2 * m * r
            numerator = [poch(4, 4, m + r - 1, a_power=1)]
            denominator = [poch(1, 1, 4 * m - 1, a_power=1), poch(1, 1, 2 * r), poch(2, 2, m - r)]
        parts.append(
            product_term(
                sign, 0, q_exp, orders.q_order, orders.a_order,
                numerator=numerator, denominator=denominator,
            )
        )
    return series_sum(parts, orders.q_order, orders.a_order)


CLOSED_FORMS: Dict[Tuple[int, int], ClosedForm] = {
    (1, 1): _beta_11,
    (1, 2): _beta_12,
    (2, 1): _beta_21,
    (2, 2): _beta_22,
    (2, 3): _beta_23,
    (2, 4): _beta_24,
    (3, 3): _beta_33,
    (3, 4): _beta_34,
    (3, 5): _beta_35,
    (4, 6): _beta_46,
}


def has_closed_form(params: DKParams) -> bool:
    return (params.d, params.k) in CLOSED_FORMS


def beta_closed(params: DKParams, n: int, orders: Orders) -> TruncatedSeries:
    """
    Closed-form beta_n.

    Args:
        params: One of the supported (d, k) pairs.
        n: Nonnegative index.
        orders: Truncation bounds.

    Raises:
        UnsupportedParams: If (d, k) has no closed form here.
        ValueError: If n is negative.
    """
    if n < 0:
        raise ValueError(f"beta index must be >= 0, got {n}")
    form = CLOSED_FORMS.get((params.d, params.k))
    if form is None:
        supported = ", ".join(f"({d},{k})" for d, k in CLOSED_FORMS)
        raise UnsupportedParams(f"No closed-form beta for {params}; supported: {supported}")
    return form(n, orders)
