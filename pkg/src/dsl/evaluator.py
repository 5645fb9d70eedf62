"""
Expression trees to truncated series, and identity verification.

Products are evaluated exactly: the monomial part (constants, powers of
q, a and -1) is applied last as a shift, so a term like
q^(n^2)/(q;q)_n is built at order N - n^2 and then moved into place.
Sums run until the cutoff from bounds.py says no later index can reach
the window.
"""

import logging
import time
from dataclasses import replace
from typing import Dict, List, Mapping, Optional, Tuple

from ..core.exceptions import NonIntegerExponent, ValidationError
from ..core.pochhammer import PochhammerSpec, div_pochhammer, mul_pochhammer
from ..core.series import TruncatedSeries, monomial, one, series_sum, zero
from ..verification.report import FAIL, Divergence, VerificationReport, compare_series, elapsed_ms_since
from .bounds import cutoff, valuation_floor
from .nodes import Add, APow, Const, IdentityAST, InfProduct, Mul, Neg1Pow, Node, Poch, QPow, Sum

logger = logging.getLogger(__name__)

Env = Mapping[str, int]


def _int_value(poly, env: Env, node, what: str) -> int:
    value = poly.evaluate(env)
    if value.denominator != 1:
        raise NonIntegerExponent(f"{what} {poly} is {value} at {dict(env)}")
    return int(value)


def _spec(node: Poch, env: Env) -> PochhammerSpec:
    length = None if node.length is None else _int_value(node.length, env, node, "Pochhammer length")
    return PochhammerSpec(
        sign=node.sign, a_power=node.a_power, q_offset=node.q_offset, q_step=node.q_step, length=length
    )


def _eval_product(factors, env: Env, q_order: int, a_order: Optional[int]) -> TruncatedSeries:
    pochs = []
    for factor in factors:
        if isinstance(factor, Poch):
            pochs.append((_spec(factor, env), factor))
        elif isinstance(factor, InfProduct):
            pochs.extend((_spec(f, env), f) for f in factor.factors)

    # 1/(x;q)_M = 0 for M < 0, whatever the numerator is.
    for spec, node in pochs:
        if node.in_denominator and spec.length is not None and spec.length < 0:
            return zero(q_order, a_order)
    for spec, node in pochs:
        if not node.in_denominator and spec.length is not None and spec.length < 0:
            raise ValidationError(
                f"numerator Pochhammer length is {spec.length} at {dict(env)}", node.line, node.column
            )

    coeff, a_exp, q_exp = 1, 0, 0
    generic: List[Node] = []
    for factor in factors:
        if isinstance(factor, Const):
            coeff *= factor.value
        elif isinstance(factor, QPow):
            q_exp += _int_value(factor.exponent, env, factor, "q-exponent")
        elif isinstance(factor, APow):
            a_exp += _int_value(factor.exponent, env, factor, "a-exponent")
        elif isinstance(factor, Neg1Pow):
            coeff *= -1 if _int_value(factor.exponent, env, factor, "(-1)-exponent") % 2 else 1
        elif not isinstance(factor, (Poch, InfProduct)):
            generic.append(factor)
    if coeff == 0:
        return zero(q_order, a_order)

    floors = [valuation_floor(g, env) for g in generic]
    slack = sum(max(0, -f) for f in floors)
    work_q = q_order - q_exp + slack
    work_a = None if a_order is None else a_order - a_exp
    if work_q < 0 or (work_a is not None and work_a < 0):
        return zero(q_order, a_order)

    acc = one(work_q, work_a)
    for g in generic:
        acc = acc * _eval(g, env, work_q, work_a)
    for spec, node in pochs:
        acc = div_pochhammer(acc, spec) if node.in_denominator else mul_pochhammer(acc, spec)
    return acc.shift(a_exp, q_exp).scale(coeff).truncate(q_order, a_order)


def _eval_sum(node: Sum, env: Env, q_order: int, a_order: Optional[int]) -> TruncatedSeries:
    bounds = cutoff(node, env, q_order)
    parts: List[TruncatedSeries] = []
    t = node.lower
    inner: Dict[str, int] = dict(env)
    while not bounds.stops_at(t, q_order):
        inner[node.index] = t
        parts.append(_eval(node.body, inner, q_order, a_order))
        t += 1
    logger.debug(f"sum over {node.index} at {dict(env)}: {len(parts)} terms")
    return series_sum(parts, q_order, a_order)


def _eval(node: Node, env: Env, q_order: int, a_order: Optional[int]) -> TruncatedSeries:
    if isinstance(node, Add):
        return series_sum([_eval(t, env, q_order, a_order) for t in node.terms], q_order, a_order)
    if isinstance(node, Sum):
        return _eval_sum(node, env, q_order, a_order)
    if isinstance(node, Const):
        return monomial(node.value, 0, 0, q_order, a_order)
    if isinstance(node, Mul):
        return _eval_product(node.factors, env, q_order, a_order)
    if isinstance(node, (QPow, APow, Neg1Pow, Poch, InfProduct)):
        return _eval_product((node,), env, q_order, a_order)
    raise TypeError(f"Unknown node type {type(node).__name__}")


def evaluate(
    node: Node, q_order: int, a_order: Optional[int] = None, env: Optional[Env] = None
) -> TruncatedSeries:
    """
    Expand an expression tree.

    Args:
        node: A validated expression.
        q_order: Truncation order in q.
        a_order: Truncation order in a, None to keep every power.
        env: Values for indices bound outside node.

    Returns:
        The exact truncated series.

    Raises:
        NonTerminatingSum: If a sum cannot be cut off.
        NonIntegerExponent: If an exponent or length is fractional at
            some index values.

    Example:
        >>> format_series(evaluate(parse_expression("poch(q;q;3)"), 10))
        '1 -1q -1q^2 +1q^4 +1q^5 -1q^6'
    """
    if not isinstance(q_order, int) or q_order < 0:
        raise ValueError(f"q_order must be a non-negative int, got {q_order!r}")
    return _eval(node, dict(env or {}), q_order, a_order)


def _negative_exponent(series: TruncatedSeries) -> Optional[Tuple[int, int]]:
    for (a_exp, q_exp), _ in series:
        if q_exp < 0 or a_exp < 0:
            return a_exp, q_exp
    return None


def verify(identity: IdentityAST, q_order: int, a_order: Optional[int] = None) -> VerificationReport:
    """
    Evaluate both sides and compare them coefficientwise.

    Univariate identities ignore a_order. Both sides must come out as
    ordinary power series; a negative exponent fails the check.

    Returns:
        A report named after the identity.
    """
    if not identity.free_variables:
        a_order = None
    start = time.perf_counter()
    lhs = evaluate(identity.lhs, q_order, a_order)
    rhs = evaluate(identity.rhs, q_order, a_order)
    for side, series in (("lhs", lhs), ("rhs", rhs)):
        position = _negative_exponent(series)
        if position is not None:
            a_exp, q_exp = position
            divergence = Divergence(
                f"{side} has a negative exponent",
                a_exp,
                q_exp,
                lhs.terms.get(position, 0),
                rhs.terms.get(position, 0),
            )
            return VerificationReport(
                target=identity.name,
                status=FAIL,
                checked_q_order=q_order,
                checked_a_order=a_order or 0,
                first_divergence=divergence,
                elapsed_ms=elapsed_ms_since(start),
            )
    report = compare_series(identity.name, [("lhs=rhs", lhs, rhs)])
    return replace(report, elapsed_ms=elapsed_ms_since(start))
