"""
The parametrized Bailey pair: alpha in closed form, beta by definition.

For m = d*r with r >= 1

    alpha_m = (-1)^r a^((k-d)r) q^((dk - d^2 + d/2) r^2 - (d/2) r)
              * (1 - a q^(2dr)) (aq^d; q^d)_(r-1) / (q^d; q^d)_r,

alpha_0 = 1 and alpha_m = 0 when d does not divide m. The factor
(a; q^2d)_r of the uncancelled form has constant term (1 - a)^r and is
never divided by.

beta_n = sum_{r=0}^{n} alpha_r / ((q;q)_(n-r) (aq;q)_(n+r)).
"""

import logging
import threading
from typing import Callable, Dict, Optional, Tuple

from ..core.pochhammer import div_pochhammer, poch, product_term
from ..core.series import Orders, TruncatedSeries, one, series_sum, zero
from .params import DKParams

logger = logging.getLogger(__name__)

AlphaSource = Callable[[int, Orders], TruncatedSeries]


def alpha(params: DKParams, m: int, orders: Orders) -> TruncatedSeries:
    """
    alpha_m of the (d, k) pair.

    Args:
        params: The (d, k) pair.
        m: Nonnegative index.
        orders: Truncation bounds.

    Returns:
        The series; zero when d does not divide m.

    Raises:
        ValueError: If m is negative.
    """
    if m < 0:
        raise ValueError(f"alpha index must be >= 0, got {m}")
    d, k = params.d, params.k
    if m % d:
        return zero(orders.q_order, orders.a_order)
    r = m // d
    if r == 0:
        return one(orders.q_order, orders.a_order)
    term = product_term(
        (-1) ** r,
        (k - d) * r,
        params.alpha_min_exponent(r),
        orders.q_order,
        orders.a_order,
        numerator=[poch(d, d, r - 1, a_power=1)],
        denominator=[poch(d, d, r)],
    )
    return term.mul_binomial(-1, 1, 2 * d * r)


def beta_definitional(
    params: DKParams, n: int, orders: Orders, alphas: Optional[AlphaSource] = None
) -> TruncatedSeries:
    """
    beta_n from the Bailey pair relation.

    Args:
        params: The (d, k) pair.
        n: Nonnegative index.
        orders: Truncation bounds.
        alphas: Where to take alpha_r from; defaults to computing each one.

    Example:
        For (d, k) = (1, 2) this is 1/(q;q)_n.
    """
    if n < 0:
        raise ValueError(f"beta index must be >= 0, got {n}")
    parts = []
    for r in range(0, n + 1, params.d):
        a_r = alpha(params, r, orders) if alphas is None else alphas(r, orders)
        a_r = div_pochhammer(a_r, poch(1, 1, n - r))
        a_r = div_pochhammer(a_r, poch(1, 1, n + r, a_power=1))
        parts.append(a_r)
    return series_sum(parts, orders.q_order, orders.a_order)


class _MemoSequence:
    """Thread-safe memo of index -> series for one (d, k) pair."""

    def __init__(self, params: DKParams, orders: Orders) -> None:
        self.params = params
        self.orders = orders
        self._cache: Dict[Tuple[int, int], TruncatedSeries] = {}
        self._lock = threading.Lock()

    def _compute(self, n: int, orders: Orders) -> TruncatedSeries:
        raise NotImplementedError

    def get(self, n: int, q_order: Optional[int] = None) -> TruncatedSeries:
        """Term n, optionally at a smaller q_order than the sequence's own."""
        q_order = self.orders.q_order if q_order is None else q_order
        key = (n, q_order)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self._compute(n, self.orders.with_q(q_order))
        with self._lock:
            self._cache.setdefault(key, value)
        return value

    def __getitem__(self, n: int) -> TruncatedSeries:
        return self.get(n)


class AlphaSequence(_MemoSequence):
    """Memoized alpha_m for fixed (d, k) and orders."""

    def _compute(self, n: int, orders: Orders) -> TruncatedSeries:
        return alpha(self.params, n, orders)


class BetaSequence(_MemoSequence):
    """Memoized definitional beta_n; the alphas it sums are memoized too."""

    def __init__(self, params: DKParams, orders: Orders) -> None:
        super().__init__(params, orders)
        self.alphas = AlphaSequence(params, orders)

    def _compute(self, n: int, orders: Orders) -> TruncatedSeries:
        return beta_definitional(
            self.params, n, orders, alphas=lambda r, o: self.alphas.get(r, o.q_order)
        )
