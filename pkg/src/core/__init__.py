"""
Core module for the q-series toolkit.

Exact truncated series in a and q, half-integer exponents, Pochhammer
products, theta sums and the exception hierarchy shared by every other
subpackage.
"""

from .exceptions import (
    CatalogError,
    NegativeAPower,
    NonIntegerExponent,
    NonTerminatingSum,
    NonTruncating,
    NotInvertible,
    ParseError,
    QSeriesError,
    UnsupportedParams,
    ValidationError,
)
from .exponents import HalfExponent, quadratic_exponent
from .pochhammer import (
    PochhammerSpec,
    div_pochhammer,
    euler_product,
    mul_pochhammer,
    poch,
    pochhammer,
    product_term,
    q_factorial,
    reciprocal_pochhammer,
)
from .series import (
    A_ONE,
    A_ZERO,
    AtOne,
    AtZero,
    Orders,
    QPower,
    TruncatedSeries,
    add,
    eval_a,
    format_series,
    invert,
    monomial,
    mul,
    one,
    series_sum,
    shift,
    sub,
    substitute,
    zero,
)
from .theta import theta_as_product, theta_exponents, theta_sum, triple_product

__all__ = [
    "CatalogError",
    "NegativeAPower",
    "NonIntegerExponent",
    "NonTerminatingSum",
    "NonTruncating",
    "NotInvertible",
    "ParseError",
    "QSeriesError",
    "UnsupportedParams",
    "ValidationError",
    "HalfExponent",
    "quadratic_exponent",
    "PochhammerSpec",
    "div_pochhammer",
    "euler_product",
    "mul_pochhammer",
    "poch",
    "pochhammer",
    "product_term",
    "q_factorial",
    "reciprocal_pochhammer",
    "A_ONE",
    "A_ZERO",
    "AtOne",
    "AtZero",
    "Orders",
    "QPower",
    "TruncatedSeries",
    "add",
    "eval_a",
    "format_series",
    "invert",
    "monomial",
    "mul",
    "one",
    "series_sum",
    "shift",
    "sub",
    "substitute",
    "zero",
    "theta_as_product",
    "theta_exponents",
    "theta_sum",
    "triple_product",
]
