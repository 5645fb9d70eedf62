"""
Insertion of a Bailey pair into the three limiting forms of Bailey's lemma.

    WBL     sum_j a^j q^(j^2) beta_j
              = 1/(aq;q)_inf * sum_m a^m q^(m^2) alpha_m

    ATNSBL  sum_j a^j q^(j^2) (-q;q^2)_j beta_j(a, q^2)
              = (-aq;q^2)_inf/(aq^2;q^2)_inf
                * sum_m a^m q^(m^2) (-q;q^2)_m/(-aq;q^2)_m alpha_m(a, q^2)

    SSBL    sum_j a^j q^(j(j+1)/2) (-1;q)_j beta_j
              = (-aq;q)_inf/(aq;q)_inf
                * sum_m a^m q^(m(m+1)/2) (-1;q)_m/(-aq;q)_m alpha_m

Both sums are cut off at the index J past which every summand starts
beyond q_order. The bound uses the smallest q-exponent alpha_m can have,
which also bounds beta_j from below.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional

from ..core.pochhammer import div_pochhammer, mul_pochhammer, poch
from ..core.series import Orders, TruncatedSeries, series_sum
from .closed_forms import beta_closed
from .pairs import alpha, beta_definitional
from .params import DKParams

logger = logging.getLogger(__name__)

BetaSource = Callable[[DKParams, int, Orders], TruncatedSeries]

BETA_SOURCES = {"definitional": beta_definitional, "closed": beta_closed}


class Transform(str, Enum):
    """The three limiting corollaries of Bailey's lemma."""

    WBL = "WBL"
    ATNSBL = "ATNSBL"
    SSBL = "SSBL"


class Insertion(NamedTuple):
    lhs: TruncatedSeries
    rhs: TruncatedSeries


def _prefactor_exponent(transform: Transform, j: int) -> int:
    if transform is Transform.SSBL:
        return j * (j + 1) // 2
    return j * j


def _base_scale(transform: Transform) -> int:
    return 2 if transform is Transform.ATNSBL else 1


def index_cutoff(transform: Transform, params: DKParams, q_order: int) -> int:
    """
    Largest index whose summand can still reach q_order.

    A summand j has q-valuation at least P(j) + s*(min(c,0)/d^2 j^2 - j/2)
    where P is the prefactor exponent, s the base scale and c the r^2
    coefficient of alpha's exponent. The bound is a quadratic in j with
    positive leading coefficient for every (d, k).
    """
    s = _base_scale(transform)
    curvature = params.alpha_curvature_bound()
    if transform is Transform.SSBL:
        quad, lin = Fraction(1, 2), Fraction(1, 2)
    else:
        quad, lin = Fraction(1), Fraction(0)
    quad += s * curvature
    lin -= Fraction(s, 2)
    if quad <= 0:
        raise ValueError(f"{transform.value} with {params} has no provable cutoff")
    vertex = -lin / (2 * quad)
    j = 0
    last_reachable = 0
    while True:
        bound = quad * j * j + lin * j
        if bound <= q_order:
            last_reachable = j
        elif j > vertex:
            return last_reachable
        j += 1


def _at_base(
    series_at: Callable[[Orders], TruncatedSeries], transform: Transform, orders: Orders
) -> TruncatedSeries:
    """Evaluate a beta_j or alpha_m at base q or q^2, ending at orders.q_order."""
    if _base_scale(transform) == 1:
        return series_at(orders)
    inner = orders.with_q(orders.q_order // 2)
    return series_at(inner).substitute(0, 2, q_order=orders.q_order)


def _lhs_term(transform: Transform, j: int, beta_j: TruncatedSeries) -> TruncatedSeries:
    term = beta_j.shift(j, _prefactor_exponent(transform, j))
    if transform is Transform.ATNSBL:
        term = mul_pochhammer(term, poch(1, 2, j, sign=-1))
    elif transform is Transform.SSBL:
        term = mul_pochhammer(term, poch(0, 1, j, sign=-1))
    return term


def _rhs_term(transform: Transform, m: int, alpha_m: TruncatedSeries) -> TruncatedSeries:
    term = alpha_m.shift(m, _prefactor_exponent(transform, m))
    if transform is Transform.ATNSBL:
        term = mul_pochhammer(term, poch(1, 2, m, sign=-1))
        term = div_pochhammer(term, poch(1, 2, m, a_power=1, sign=-1))
    elif transform is Transform.SSBL:
        term = mul_pochhammer(term, poch(0, 1, m, sign=-1))
        term = div_pochhammer(term, poch(1, 1, m, a_power=1, sign=-1))
    return term


def beta_side(
    transform: Transform,
    params: DKParams,
    orders: Orders,
    beta: BetaSource = beta_definitional,
) -> TruncatedSeries:
    """The beta sum of a corollary (its left-hand side)."""
    cutoff = index_cutoff(transform, params, orders.q_order)
    parts: List[TruncatedSeries] = []
    for j in range(cutoff + 1):
        inner = orders.with_q(orders.q_order - _prefactor_exponent(transform, j))
        beta_j = _at_base(lambda o, j=j: beta(params, j, o), transform, inner)
        parts.append(_lhs_term(transform, j, beta_j))
    logger.debug(f"{transform.value} {params}: beta side summed over j <= {cutoff}")
    return series_sum(parts, orders.q_order, orders.a_order)


def alpha_side(transform: Transform, params: DKParams, orders: Orders) -> TruncatedSeries:
    """
    The alpha sum of a corollary without its infinite-product prefactor.

    Example:
        WBL with (d, k) = (1, 1) at a = 1 is Euler's pentagonal series.
    """
    cutoff = index_cutoff(transform, params, orders.q_order)
    parts: List[TruncatedSeries] = []
    for m in range(0, cutoff + 1, params.d):
        inner = orders.with_q(orders.q_order - _prefactor_exponent(transform, m))
        alpha_m = _at_base(lambda o, m=m: alpha(params, m, o), transform, inner)
        parts.append(_rhs_term(transform, m, alpha_m))
    return series_sum(parts, orders.q_order, orders.a_order)


def _rhs_prefactor(transform: Transform, s: TruncatedSeries) -> TruncatedSeries:
    if transform is Transform.WBL:
        return div_pochhammer(s, poch(1, 1, a_power=1))
    if transform is Transform.ATNSBL:
        s = mul_pochhammer(s, poch(1, 2, a_power=1, sign=-1))
        return div_pochhammer(s, poch(2, 2, a_power=1))
    s = mul_pochhammer(s, poch(1, 1, a_power=1, sign=-1))
    return div_pochhammer(s, poch(1, 1, a_power=1))


def insert(
    transform: Transform,
    params: DKParams,
    orders: Orders,
    beta_source: str = "definitional",
    beta: Optional[BetaSource] = None,
) -> Insertion:
    """
    Insert the (d, k) pair into one corollary of Bailey's lemma.

    Args:
        transform: WBL, ATNSBL or SSBL.
        params: The (d, k) pair.
        orders: Truncation bounds of both sides.
        beta_source: "definitional" or "closed".
        beta: Explicit beta constructor; overrides beta_source.

    Returns:
        Insertion(lhs, rhs), both truncated to orders.

    Raises:
        ValueError: For an unknown beta_source.
        UnsupportedParams: For beta_source "closed" without a closed form.
    """
    transform = Transform(transform)
    if beta is None:
        try:
            beta = BETA_SOURCES[beta_source]
        except KeyError as e:
            raise ValueError(
                f"Unknown beta source {beta_source!r}, expected one of {sorted(BETA_SOURCES)}"
            ) from e
    lhs = beta_side(transform, params, orders, beta)
    rhs = _rhs_prefactor(transform, alpha_side(transform, params, orders))
    return Insertion(lhs, rhs)
