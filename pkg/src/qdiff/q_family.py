"""
The Q family and its product side.

    Q_{d,k,i}(a) = 1/(aq;q)_inf * sum_{n>=0} (-1)^n a^(kn)
                   q^((dk + d/2) n^2 + (k - i + 1/2) d n)
                   (1 - a^i q^((2n+1) d i)) (aq^d;q^d)_n / (q^d;q^d)_n

The n-th summand starts at q^((dk + d/2) n^2 + (k - i + 1/2) d n), which
increases with n, so the sum stops at the first n beyond q_order.
"""

import logging
from typing import List

from ..core.exponents import HalfExponent, quadratic_exponent
from ..core.pochhammer import div_pochhammer, poch, product_term
from ..core.series import Orders, TruncatedSeries, series_sum
from ..core.theta import triple_product
from .base_family import BaseFamily, FamilyIndex

logger = logging.getLogger(__name__)


def _leading_coefficient(d: int, k: int) -> HalfExponent:
    return HalfExponent(2 * d * k + d)


def q_family(idx: FamilyIndex, orders: Orders) -> TruncatedSeries:
    """
    Q_{d,k,i}(a, q) truncated to orders.

    Example:
        Q_{1,2,2} at a = 1 is 1 + q + q^2 + q^3 + 2q^4 + ...
    """
    d, k, i = idx.d, idx.k, idx.i
    A = _leading_coefficient(d, k)
    B = HalfExponent((2 * k - 2 * i + 1) * d)
    parts: List[TruncatedSeries] = []
    n = 0
    while True:
        exponent = quadratic_exponent(A, B, n)
        if exponent > orders.q_order:
            break
        term = product_term(
            (-1) ** n,
            k * n,
            exponent,
            orders.q_order,
            orders.a_order,
            numerator=[poch(d, d, n, a_power=1)],
            denominator=[poch(d, d, n)],
        )
        parts.append(term.mul_binomial(-1, i, (2 * n + 1) * d * i))
        n += 1
    total = series_sum(parts, orders.q_order, orders.a_order)
    return div_pochhammer(total, poch(1, 1, a_power=1))


def q_kk_alternate(d: int, k: int, orders: Orders) -> TruncatedSeries:
    """
    Q_{d,k,k} through its alternate sum

        1/(aq;q)_inf * (1 + sum_{n>=1} (-1)^n a^(kn) q^((dk + d/2) n^2 - (d/2) n)
                        (1 - a q^(2dn)) (aq^d;q^d)_(n-1) / (q^d;q^d)_n)
    """
    A = _leading_coefficient(d, k)
    B = HalfExponent(-d)
    parts: List[TruncatedSeries] = [product_term(1, 0, 0, orders.q_order, orders.a_order)]
    n = 1
    while True:
        exponent = quadratic_exponent(A, B, n)
        if exponent > orders.q_order:
            break
        term = product_term(
            (-1) ** n,
            k * n,
            exponent,
            orders.q_order,
            orders.a_order,
            numerator=[poch(d, d, n - 1, a_power=1)],
            denominator=[poch(d, d, n)],
        )
        parts.append(term.mul_binomial(-1, 1, 2 * d * n))
        n += 1
    total = series_sum(parts, orders.q_order, orders.a_order)
    return div_pochhammer(total, poch(1, 1, a_power=1))


def product_side(idx: FamilyIndex, q_order: int) -> TruncatedSeries:
    """
    (q^(id), q^((2k-i+1)d), q^((2k+1)d); q^((2k+1)d))_inf / (q;q)_inf.

    Example:
        (1,2,1) gives the second Rogers-Ramanujan product
        (q, q^4, q^5; q^5)_inf / (q;q)_inf.
    """
    m = idx.modulus
    numerator = triple_product(idx.i * idx.d, (2 * idx.k - idx.i + 1) * idx.d, m, q_order)
    return div_pochhammer(numerator, poch(1, 1))


class QFamily(BaseFamily):
    """The Q_{d,k,i} family for any d, k >= 1."""

    name = "Q"

    def member(self, i: int, orders: Orders) -> TruncatedSeries:
        return q_family(self.index(i), orders)


