"""
Theta sums and Jacobi triple products.
"""

import logging
from typing import Dict, Optional, Tuple

from .exceptions import NonTruncating
from .exponents import HalfExponent, quadratic_exponent
from .pochhammer import PochhammerSpec, mul_pochhammer
from .series import TruncatedSeries, one

logger = logging.getLogger(__name__)


def theta_sum(A: HalfExponent, B: HalfExponent, q_order: int) -> TruncatedSeries:
    """
    Sum over all integers n of (-1)^n q^(A n^2 + B n), truncated.

    Args:
        A: Quadratic coefficient, must be positive.
        B: Linear coefficient.
        q_order: Truncation order.

    Returns:
        The truncated theta series. Both tails are walked outward from
        the vertex -B/(2A) until the exponent passes q_order.

    Raises:
        ValueError: If A <= 0.
        NonIntegerExponent: If some A n^2 + B n is not an integer.

    Example:
        A = 3/2, B = -1/2 gives Euler's pentagonal series
        1 - q - q^2 + q^5 + q^7 - q^12 + ...
    """
    A = HalfExponent.of(A)
    B = HalfExponent.of(B)
    if A.numerator <= 0:
        raise ValueError(f"theta_sum needs A > 0, got {A}")

    vertex = -B.to_fraction() / (2 * A.to_fraction())
    terms: Dict[Tuple[int, int], int] = {}

    def walk(start: int, step: int) -> None:
        n = start
        while True:
            exponent = quadratic_exponent(A, B, n)
            past_vertex = (n - vertex) * step >= 0
            if exponent > q_order and past_vertex:
                return
            if exponent <= q_order:
                key = (0, exponent)
                terms[key] = terms.get(key, 0) + (-1 if n % 2 else 1)
            n += step

    centre = int(vertex) if vertex >= 0 else -int(-vertex)
    walk(centre, 1)
    walk(centre - 1, -1)
    return TruncatedSeries(terms, q_order)


def triple_product(x: int, y: int, m: int, q_order: int, a_order: Optional[int] = None) -> TruncatedSeries:
    """
    (q^x, q^y, q^m; q^m)_inf.

    Raises:
        NonTruncating: If any of x, y, m is below 1.
    """
    if min(x, y, m) < 1:
        raise NonTruncating(f"triple product ({x}, {y}, {m}) needs positive exponents")
    result = one(q_order, a_order)
    for offset in (x, y, m):
        result = mul_pochhammer(result, PochhammerSpec(q_offset=offset, q_step=m))
    return result


def theta_as_product(A: HalfExponent, B: HalfExponent, q_order: int) -> TruncatedSeries:
    """
    The triple-product side matching theta_sum(A, B).

    With m = 2A, x = A - B, y = A + B the sum equals (q^x, q^y, q^m; q^m)_inf.
    """
    A = HalfExponent.of(A)
    B = HalfExponent.of(B)
    return triple_product((A - B).to_int(), (A + B).to_int(), (A * 2).to_int(), q_order)


def half(value: int) -> HalfExponent:
    """value / 2 as a HalfExponent."""
    return HalfExponent(value)


def theta_exponents(d: int, k: int, i: int) -> Tuple[HalfExponent, HalfExponent]:
    """(A, B) = (dk + d/2, -(dk - di + d/2)) for the (d, k, i) product side."""
    A = HalfExponent(2 * d * k + d)
    B = -HalfExponent(2 * d * k - 2 * d * i + d)
    return A, B
