"""
Rising q-factorials as truncated series.

A PochhammerSpec describes the product of factors
(1 - sign * a^a_power * q^(q_offset + j*q_step)) for j = 0 .. length-1,
or for every j >= 0 when length is None. Factors are applied one at a
time through TruncatedSeries.mul_binomial / div_binomial, so building
(q;q)_n or dividing by it is linear in the number of stored terms per
factor.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .exceptions import NonTruncating
from .series import TruncatedSeries, monomial, one, zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PochhammerSpec:
    """
    Symbolic (sign * a^a_power * q^q_offset ; q^q_step)_length.

    Attributes:
        sign: +1 or -1; each factor is 1 - sign * a^a_power * q^e.
        a_power: Power of a in every factor (>= 0).
        q_offset: q-exponent of the first factor.
        q_step: Increment of the q-exponent between factors (>= 1).
        length: Number of factors, or None for the infinite product.
            A negative length is accepted here so that
            reciprocal_pochhammer can apply the 1/(x;q)_M = 0 convention;
            pochhammer itself rejects it.

    Example:
        (q;q)_3 is PochhammerSpec(q_offset=1, q_step=1, length=3) and
        (-1;q)_2 is PochhammerSpec(sign=-1, q_offset=0, length=2).
    """

    sign: int = 1
    a_power: int = 0
    q_offset: int = 0
    q_step: int = 1
    length: Optional[int] = None

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.a_power < 0:
            raise ValueError(f"a_power must be >= 0, got {self.a_power}")
        if self.q_step < 1:
            raise ValueError(f"q_step must be >= 1, got {self.q_step}")

    @property
    def is_infinite(self) -> bool:
        return self.length is None

    def exponents(self) -> Iterator[int]:
        """q-exponents of the factors (unbounded for infinite products)."""
        j = 0
        while self.length is None or j < self.length:
            yield self.q_offset + j * self.q_step
            j += 1

    def _check_truncates(self) -> None:
        if self.length is None and self.q_offset <= 0 and self.a_power == 0:
            raise NonTruncating(
                f"infinite product with q_offset={self.q_offset} and no power of a "
                f"never leaves the truncation window"
            )


def _factor_applies(series: TruncatedSeries, exponent: int) -> bool:
    valuation = series.valuation()
    if valuation is None:
        return False
    return not (exponent >= 1 and exponent + valuation > series.q_order)


def mul_pochhammer(s: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    """
    Multiply s by the product described by spec.

    Raises:
        ValueError: For a negative finite length.
        NonTruncating: For an infinite product that cannot truncate.
    """
    if spec.length is not None and spec.length < 0:
        raise ValueError(f"Pochhammer length must be >= 0, got {spec.length}")
    spec._check_truncates()
    coeff = -spec.sign
    for exponent in spec.exponents():
        if not _factor_applies(s, exponent):
            break
        s = s.mul_binomial(coeff, spec.a_power, exponent)
    return s


def div_pochhammer(s: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    """
    Divide s by the product described by spec.

    A negative finite length yields the zero series (1/(x;q)_M = 0 for
    M < 0).

    Raises:
        NotInvertible: If some factor has q-exponent below 1 and is not a
            unit constant.
        NonTruncating: For an infinite product that cannot truncate.
    """
    if spec.length is not None and spec.length < 0:
        return zero(s.q_order, s.a_order)
    spec._check_truncates()
    coeff = -spec.sign
    for exponent in spec.exponents():
        if not _factor_applies(s, exponent):
            break
        s = s.div_binomial(coeff, spec.a_power, exponent)
    return s


def pochhammer(spec: PochhammerSpec, q_order: int, a_order: Optional[int] = None) -> TruncatedSeries:
    """
    Expand the product described by spec.

    Args:
        spec: Product description.
        q_order: Truncation order in q.
        a_order: Optional truncation order in a.

    Returns:
        The truncated product. Infinite products stop multiplying as soon
        as a factor can no longer reach q_order.

    Raises:
        ValueError: For a negative finite length.
        NonTruncating: For length None with q_offset <= 0 and a_power 0.

    Example:
        >>> format_series(pochhammer(PochhammerSpec(q_offset=1, length=3), 10))
        '1 -1q -1q^2 +1q^4 +1q^5 -1q^6'
    """
    return mul_pochhammer(one(q_order, a_order), spec)


def reciprocal_pochhammer(
    spec: PochhammerSpec, q_order: int, a_order: Optional[int] = None
) -> TruncatedSeries:
    """1/pochhammer(spec), or the zero series when the finite length is negative."""
    return div_pochhammer(one(q_order, a_order), spec)


def q_factorial(n: Optional[int], q_order: int, step: int = 1, a_order: Optional[int] = None) -> TruncatedSeries:
    """(q^step; q^step)_n, with n = None for the infinite product."""
    return pochhammer(PochhammerSpec(q_offset=step, q_step=step, length=n), q_order, a_order)


def euler_product(q_order: int) -> TruncatedSeries:
    """(q;q)_inf."""
    return q_factorial(None, q_order)


def poch(
    q_offset: int, q_step: int = 1, length: Optional[int] = None, a_power: int = 0, sign: int = 1
) -> PochhammerSpec:
    """Positional shorthand: poch(1, 2, n, a_power=1) is (aq;q^2)_n."""
    return PochhammerSpec(sign=sign, a_power=a_power, q_offset=q_offset, q_step=q_step, length=length)


def product_term(
    coeff: int,
    a_exp: int,
    q_exp: int,
    q_order: int,
    a_order: Optional[int] = None,
    numerator: Sequence[PochhammerSpec] = (),
    denominator: Sequence[PochhammerSpec] = (),
) -> TruncatedSeries:
    """
    coeff * a^a_exp * q^q_exp * prod(numerator) / prod(denominator).

    The monomial is placed exactly before any product is applied, so a
    negative q_exp costs no precision. A denominator with negative finite
    length makes the whole term zero.
    """
    if any(spec.length is not None and spec.length < 0 for spec in denominator):
        return zero(q_order, a_order)
    s = monomial(coeff, a_exp, q_exp, q_order, a_order)
    for spec in numerator:
        s = mul_pochhammer(s, spec)
    for spec in denominator:
        s = div_pochhammer(s, spec)
    return s
