"""
Exact truncated bivariate Laurent series in a and q.

TruncatedSeries is the value type every other module works with. It
stores the nonzero coefficients of a^i q^j as Python ints (so they never
overflow) together with the truncation window: every stored q-exponent is
at most q_order and, when a_order is set, every stored a-exponent is at
most a_order. A series is immutable once built.

Precision is tracked honestly. Adding keeps the smaller window.
Multiplying two ordinary power series keeps the smaller q_order; when a
factor carries negative q-powers the known part of the product shrinks by
that amount, and the result says so.
"""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from .exceptions import NegativeAPower, NotInvertible

logger = logging.getLogger(__name__)

Key = Tuple[int, int]


@dataclass(frozen=True)
class Orders:
    """
    Truncation bounds passed between modules.

    Attributes:
        q_order: Largest q-exponent that is kept.
        a_order: Largest a-exponent that is kept, or None for no bound.
    """

    q_order: int
    a_order: Optional[int] = None

    def __post_init__(self) -> None:
        if not isinstance(self.q_order, int) or isinstance(self.q_order, bool):
            raise TypeError(f"q_order must be int, got {type(self.q_order).__name__}")
        if self.a_order is not None and (
            not isinstance(self.a_order, int) or isinstance(self.a_order, bool)
        ):
            raise TypeError(f"a_order must be int or None, got {type(self.a_order).__name__}")

    def with_q(self, q_order: int) -> "Orders":
        return Orders(q_order, self.a_order)


@dataclass(frozen=True)
class AtZero:
    """Specialisation a = 0."""


@dataclass(frozen=True)
class AtOne:
    """Specialisation a = 1."""


@dataclass(frozen=True)
class QPower:
    """Specialisation a = q^t."""

    t: int


Specialization = Union[AtZero, AtOne, QPower]
A_ZERO = AtZero()
A_ONE = AtOne()


def min_order(x: Optional[int], y: Optional[int]) -> Optional[int]:
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)


class TruncatedSeries:
    """
    Immutable truncated series sum c[i, j] a^i q^j.

    Attributes:
        terms: Read-only map (a_exp, q_exp) -> nonzero int coefficient.
        q_order: All stored q-exponents are <= q_order.
        a_order: All stored a-exponents are <= a_order (None: unbounded).

    Equality compares coefficients up to the smaller of the two windows,
    so a series computed to order 100 equals its own truncation to 50.

    Example:
        >>> one_minus_q = TruncatedSeries({(0, 0): 1, (0, 1): -1}, q_order=4)
        >>> one_minus_q.invert().coefficients()
        [1, 1, 1, 1, 1]
    """

    __slots__ = ("_terms", "_q_order", "_a_order")

    def __init__(
        self,
        terms: Mapping[Key, int],
        q_order: int,
        a_order: Optional[int] = None,
    ) -> None:
        if not isinstance(q_order, int) or isinstance(q_order, bool):
            raise TypeError(f"q_order must be int, got {type(q_order).__name__}")
        if a_order is not None and not isinstance(a_order, int):
            raise TypeError(f"a_order must be int or None, got {type(a_order).__name__}")
        cleaned: Dict[Key, int] = {}
        for (a_exp, q_exp), coeff in terms.items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            if coeff == 0 or q_exp > q_order:
                continue
            if a_order is not None and a_exp > a_order:
                continue
            cleaned[(a_exp, q_exp)] = coeff
        self._terms = cleaned
        self._q_order = q_order
        self._a_order = a_order

    @classmethod
    def _raw(
        cls, terms: Dict[Key, int], q_order: int, a_order: Optional[int]
    ) -> "TruncatedSeries":
        # Caller guarantees the invariants; skips the filtering pass.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._q_order = q_order
        obj._a_order = a_order
        return obj

    @property
    def terms(self) -> Mapping[Key, int]:
        return MappingProxyType(self._terms)

    @property
    def q_order(self) -> int:
        return self._q_order

    @property
    def a_order(self) -> Optional[int]:
        return self._a_order

    @property
    def orders(self) -> Orders:
        return Orders(self._q_order, self._a_order)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Key, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, a_exp: int, q_exp: int) -> int:
        """Coefficient of a^a_exp q^q_exp (0 when absent)."""
        if q_exp > self._q_order:
            raise ValueError(f"q^{q_exp} is beyond the truncation order {self._q_order}")
        if self._a_order is not None and a_exp > self._a_order:
            raise ValueError(f"a^{a_exp} is beyond the truncation order {self._a_order}")
        return self._terms.get((a_exp, q_exp), 0)

    def coefficients(self) -> List[int]:
        """
        Dense list of q-coefficients 0..q_order for a series free of a.

        Raises:
            ValueError: If the series contains a nonzero power of a or a
                negative power of q.
        """
        dense = [0] * (self._q_order + 1)
        for (a_exp, q_exp), coeff in self._terms.items():
            if a_exp != 0 or q_exp < 0:
                raise ValueError("coefficients() needs an ordinary series in q alone")
            dense[q_exp] = coeff
        return dense

    def valuation(self) -> Optional[int]:
        """Smallest stored q-exponent, None for the zero series."""
        if not self._terms:
            return None
        return min(q for _, q in self._terms)

    def a_valuation(self) -> Optional[int]:
        if not self._terms:
            return None
        return min(a for a, _ in self._terms)

    def is_power_series(self) -> bool:
        """True when no stored exponent is negative."""
        return all(a >= 0 and q >= 0 for a, q in self._terms)

    def rows(self) -> Dict[int, Dict[int, int]]:
        """Group the terms by q-exponent: {q_exp: {a_exp: coeff}}."""
        grouped: Dict[int, Dict[int, int]] = {}
        for (a_exp, q_exp), coeff in self._terms.items():
            grouped.setdefault(q_exp, {})[a_exp] = coeff
        return grouped

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def truncate(self, q_order: Optional[int] = None, a_order: Optional[int] = None) -> "TruncatedSeries":
        """Drop terms beyond a smaller window; never widens it."""
        new_q = self._q_order if q_order is None else min(q_order, self._q_order)
        new_a = min_order(self._a_order, a_order)
        return TruncatedSeries(self._terms, new_q, new_a)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(
            {k: -c for k, c in self._terms.items()}, self._q_order, self._a_order
        )

    def __add__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            other = monomial(other, 0, 0, self._q_order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        q_order = min(self._q_order, other._q_order)
        a_order = min_order(self._a_order, other._a_order)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return TruncatedSeries(merged, q_order, a_order)

    __radd__ = __add__

    def __sub__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            other = monomial(other, 0, 0, self._q_order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "TruncatedSeries":
        return (-self) + other

    def scale(self, factor: int) -> "TruncatedSeries":
        """Multiply every coefficient by an int."""
        if factor == 0:
            return TruncatedSeries._raw({}, self._q_order, self._a_order)
        return TruncatedSeries._raw(
            {k: c * factor for k, c in self._terms.items()}, self._q_order, self._a_order
        )

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return _multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        q_order = min(self._q_order, other._q_order)
        a_order = min_order(self._a_order, other._a_order)

        def visible(terms: Mapping[Key, int]) -> Dict[Key, int]:
            return {
                k: c
                for k, c in terms.items()
                if k[1] <= q_order and (a_order is None or k[0] <= a_order)
            }

        return visible(self._terms) == visible(other._terms)

    __hash__ = None  # type: ignore[assignment]

    def shift(self, a_exp: int, q_exp: int) -> "TruncatedSeries":
        """
        Multiply by the exact monomial a^a_exp q^q_exp.

        The window moves with the terms, so nothing is lost.
        """
        terms = {(a + a_exp, q + q_exp): c for (a, q), c in self._terms.items()}
        a_order = None if self._a_order is None else self._a_order + a_exp
        return TruncatedSeries._raw(terms, self._q_order + q_exp, a_order)

    def mul_binomial(self, coeff: int, a_exp: int, q_exp: int) -> "TruncatedSeries":
        """
        Multiply by (1 + coeff * a^a_exp * q^q_exp) in one pass.

        A factor with a negative exponent pulls unknown terms into view,
        so the window shrinks accordingly.
        """
        if coeff == 0:
            return self
        if a_exp == 0 and q_exp == 0:
            return self.scale(1 + coeff)
        q_order = self._q_order + min(q_exp, 0)
        a_order = None if self._a_order is None else self._a_order + min(a_exp, 0)
        valuation = self.valuation()
        if valuation is not None and q_exp >= 0 and valuation + q_exp > q_order:
            return self
        out = dict(self._terms)
        for (a, q), c in self._terms.items():
            q2 = q + q_exp
            a2 = a + a_exp
            if q2 > q_order or (a_order is not None and a2 > a_order):
                continue
            out[(a2, q2)] = out.get((a2, q2), 0) + coeff * c
        return TruncatedSeries(out, q_order, a_order)

    def div_binomial(self, coeff: int, a_exp: int, q_exp: int) -> "TruncatedSeries":
        """
        Divide by (1 + coeff * a^a_exp * q^q_exp).

        Raises:
            NotInvertible: If q_exp < 1 (the factor is not q-adically a
                unit), except for the constant factors 1 + coeff = +-1.
        """
        if coeff == 0:
            return self
        if a_exp == 0 and q_exp == 0:
            unit = 1 + coeff
            if unit not in (1, -1):
                raise NotInvertible(f"cannot divide by the constant {unit} over the integers")
            return self.scale(unit)
        if q_exp < 1:
            raise NotInvertible(
                f"factor (1 {coeff:+d}*a^{a_exp}*q^{q_exp}) has no q-adic inverse"
            )
        q_order = self._q_order
        a_order = self._a_order
        pending = self.rows()
        if not pending:
            return self
        out: Dict[Key, int] = {}
        for q in range(min(pending), q_order + 1):
            row = pending.pop(q, None)
            if not row:
                continue
            target_q = q + q_exp
            target = pending.setdefault(target_q, {}) if target_q <= q_order else None
            for a, c in row.items():
                if c == 0:
                    continue
                out[(a, q)] = c
                if target is None:
                    continue
                a2 = a + a_exp
                if a_order is not None and a2 > a_order:
                    continue
                target[a2] = target.get(a2, 0) - coeff * c
        return TruncatedSeries._raw(out, q_order, a_order)

    def invert(self) -> "TruncatedSeries":
        """
        Multiplicative inverse up to the same window.

        Raises:
            NotInvertible: Unless the only term with q-exponent <= 0 is
                +-1 at (0, 0).
        """
        low = {k: c for k, c in self._terms.items() if k[1] <= 0}
        if low.keys() != {(0, 0)} or low[(0, 0)] not in (1, -1):
            raise NotInvertible(
                "series needs constant term +-1 and no other term below q^1; "
                f"found {sorted(low.items())}"
            )
        unit = low[(0, 0)]
        q_order = self._q_order
        a_order = self._a_order
        source = self.rows()
        result_rows: Dict[int, Dict[int, int]] = {0: {0: unit}}
        for q in range(1, q_order + 1):
            acc: Dict[int, int] = {}
            for j in range(1, q + 1):
                s_row = source.get(j)
                r_row = result_rows.get(q - j)
                if not s_row or not r_row:
                    continue
                for a1, c1 in s_row.items():
                    for a2, c2 in r_row.items():
                        a = a1 + a2
                        if a_order is not None and a > a_order:
                            continue
                        acc[a] = acc.get(a, 0) + c1 * c2
            row = {a: -unit * c for a, c in acc.items() if c}
            if row:
                result_rows[q] = row
        out = {(a, q): c for q, row in result_rows.items() for a, c in row.items()}
        return TruncatedSeries._raw(out, q_order, a_order)

    def substitute(self, a_shift: int = 0, q_scale: int = 1, q_order: Optional[int] = None) -> "TruncatedSeries":
        """
        Map a^i q^j to a^i q^(q_scale*j + a_shift*i).

        Args:
            a_shift: d in a -> a*q^d (d >= 0).
            q_scale: m in q -> q^m (m >= 1).
            q_order: Requested window of the result. Defaults to the
                input's q_order; it may be raised up to
                q_scale*(q_order+1)-1, the largest exponent still exact.

        Raises:
            ValueError: On invalid arguments or a window beyond the
                exact range.
            NegativeAPower: When a_shift > 0 is applied to a series with
                negative powers of a.
        """
        if a_shift < 0:
            raise ValueError(f"a_shift must be >= 0, got {a_shift}")
        if q_scale < 1:
            raise ValueError(f"q_scale must be >= 1, got {q_scale}")
        a_val = self.a_valuation()
        if a_shift > 0 and a_val is not None and a_val < 0:
            raise NegativeAPower("a -> a*q^d needs a series without negative powers of a")
        limit = q_scale * (self._q_order + 1) - 1
        if q_order is None:
            q_order = self._q_order
        elif q_order > limit:
            raise ValueError(
                f"requested q_order {q_order} exceeds the exact range {limit} of the substitution"
            )
        terms: Dict[Key, int] = {}
        for (a, q), c in self._terms.items():
            new_q = q_scale * q + a_shift * a
            if new_q <= q_order:
                terms[(a, new_q)] = c
        return TruncatedSeries._raw(terms, q_order, self._a_order)

    def eval_a(self, at: Specialization) -> "TruncatedSeries":
        """
        Specialise a to 0, 1 or q^t.

        Raises:
            NegativeAPower: For a = 0 on a series with negative a-powers.
            ValueError: For a = q^t with t < 0, or for a = 1 on a series
                truncated in a.
        """
        if isinstance(at, AtZero):
            if any(a < 0 for a, _ in self._terms):
                raise NegativeAPower("cannot set a = 0 in a series with negative powers of a")
            kept = {(0, q): c for (a, q), c in self._terms.items() if a == 0}
            return TruncatedSeries._raw(kept, self._q_order, None)
        if isinstance(at, AtOne):
            return self._collapse(0)
        if isinstance(at, QPower):
            if at.t < 0:
                raise ValueError(f"a = q^t needs t >= 0, got {at.t}")
            return self._collapse(at.t)
        raise TypeError(f"Unsupported specialisation {at!r}")

    def _collapse(self, t: int) -> "TruncatedSeries":
        q_order = self._q_order
        a_val = self.a_valuation()
        if a_val is not None and a_val < 0:
            q_order += t * a_val
        if self._a_order is not None:
            if t == 0:
                raise ValueError(
                    f"a = 1 needs every power of a, but this series stops at a^{self._a_order}"
                )
            q_order = min(q_order, t * (self._a_order + 1) - 1)
        out: Dict[Key, int] = {}
        for (a, q), c in self._terms.items():
            new_q = q + t * a
            if new_q <= q_order:
                out[(0, new_q)] = out.get((0, new_q), 0) + c
        return TruncatedSeries(out, q_order, None)

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries({format_series(self)}, q_order={self._q_order}, "
            f"a_order={self._a_order})"
        )


def _multiply(left: TruncatedSeries, right: TruncatedSeries) -> TruncatedSeries:
    lv = left.valuation()
    rv = right.valuation()
    lv = left.q_order + 1 if lv is None else lv
    rv = right.q_order + 1 if rv is None else rv
    q_order = min(left.q_order + min(rv, 0), right.q_order + min(lv, 0))

    a_order: Optional[int] = None
    la = left.a_valuation() or 0
    ra = right.a_valuation() or 0
    if left.a_order is not None:
        a_order = left.a_order + min(ra, 0)
    if right.a_order is not None:
        a_order = min_order(a_order, right.a_order + min(la, 0))

    if len(left) > len(right):
        left, right = right, left
    right_rows = sorted(right.rows().items())
    out: Dict[Key, int] = {}
    for (a1, q1), c1 in left._terms.items():
        limit = q_order - q1
        for q2, row in right_rows:
            if q2 > limit:
                break
            q = q1 + q2
            for a2, c2 in row.items():
                a = a1 + a2
                if a_order is not None and a > a_order:
                    continue
                key = (a, q)
                out[key] = out.get(key, 0) + c1 * c2
    return TruncatedSeries(out, q_order, a_order)


# ----------------------------------------------------------------------
# Functional interface
# ----------------------------------------------------------------------


def monomial(
    coeff: int, a_exp: int, q_exp: int, q_order: int, a_order: Optional[int] = None
) -> TruncatedSeries:
    """
    One-term series coeff * a^a_exp * q^q_exp.

    Example:
        >>> monomial(5, 0, 11, 10).is_zero()
        True
    """
    return TruncatedSeries({(a_exp, q_exp): coeff}, q_order, a_order)


def one(q_order: int, a_order: Optional[int] = None) -> TruncatedSeries:
    return monomial(1, 0, 0, q_order, a_order)


def zero(q_order: int, a_order: Optional[int] = None) -> TruncatedSeries:
    return TruncatedSeries({}, q_order, a_order)


def add(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 + s2


def sub(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 - s2


def mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 * s2


def invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.invert()


def substitute(
    s: TruncatedSeries, a_shift: int = 0, q_scale: int = 1, q_order: Optional[int] = None
) -> TruncatedSeries:
    return s.substitute(a_shift, q_scale, q_order)


def eval_a(s: TruncatedSeries, at: Specialization) -> TruncatedSeries:
    return s.eval_a(at)


def shift(s: TruncatedSeries, a_exp: int, q_exp: int) -> TruncatedSeries:
    return s.shift(a_exp, q_exp)


def series_sum(parts: List[TruncatedSeries], q_order: int, a_order: Optional[int] = None) -> TruncatedSeries:
    """
    Add many series in one pass, truncating to the given window.

    The window of the result is the smaller of the requested one and
    every part's own window.
    """
    merged: Dict[Key, int] = {}
    for part in parts:
        q_order = min(q_order, part.q_order)
        a_order = min_order(a_order, part.a_order)
        for key, coeff in part.terms.items():
            merged[key] = merged.get(key, 0) + coeff
    return TruncatedSeries(merged, q_order, a_order)


def format_series(s: TruncatedSeries) -> str:
    """
    Render as text, lowest q-power first.

    Example:
        >>> format_series(TruncatedSeries({(0, 0): 1, (0, 1): -1, (0, 2): -1}, 5))
        '1 -1q -1q^2'
    """
    if s.is_zero():
        return "0"
    pieces: List[str] = []
    for (a_exp, q_exp), coeff in s:
        monomial_text = ""
        if a_exp != 0:
            monomial_text += "a" if a_exp == 1 else f"a^{a_exp}"
        if q_exp != 0:
            monomial_text += "q" if q_exp == 1 else f"q^{q_exp}"
        if not pieces:
            sign = "-" if coeff < 0 else ""
        else:
            sign = "-" if coeff < 0 else "+"
        pieces.append(f"{sign}{abs(coeff)}{monomial_text}")
    return " ".join(pieces)
