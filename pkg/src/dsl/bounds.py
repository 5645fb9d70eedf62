"""
Lower bounds for q-valuations of expression trees, and summation cutoffs.

A sum can only be truncated if its terms eventually leave the window.
lower_bound() gives a polynomial in the indices that never exceeds the
q-valuation of a term. Each nested sum minimises its own index away
(completing the square where the bound is convex in it, using its upper
cap otherwise) before its bound meets anything else, so what reaches a
cutoff is a quadratic in the summation index alone.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple

from ..core.exceptions import NonTerminatingSum
from .nodes import Add, Mul, Node, Poch, QPow, Sum
from .polynomial import IndexPolynomial, Monomial

logger = logging.getLogger(__name__)

Env = Mapping[str, int]


def _coefficientwise_min(polys: Iterable[IndexPolynomial]) -> IndexPolynomial:
    """A polynomial below every input wherever the variables are non-negative."""
    polys = list(polys)
    monos = set()
    for p in polys:
        monos.update(p.terms)
    return IndexPolynomial({m: min(p.coefficient(m) for p in polys) for m in monos})


def lower_bound(node: Node, env: Optional[Env] = None) -> IndexPolynomial:
    """
    Polynomial bound on the q-valuation of node in the indices bound
    outside it.

    Pochhammer symbols, powers of a and signs contribute 0; a sum of
    terms is bounded by the coefficientwise minimum of its terms' bounds.
    A nested sum is bounded over its own index first, so only outer
    indices reach that minimum.

    Raises:
        NonTerminatingSum: If a nested sum has no bound over its index.
    """
    env = env or {}
    if isinstance(node, QPow):
        return node.exponent.substitute(env)
    if isinstance(node, Mul):
        total = IndexPolynomial()
        for factor in node.factors:
            total = total + lower_bound(factor, env)
        return total
    if isinstance(node, Add):
        return _coefficientwise_min(lower_bound(t, env) for t in node.terms)
    if isinstance(node, Sum):
        body = lower_bound(node.body, env)
        cap = symbolic_cap(node)
        caps = {} if cap is None else {node.index: cap.substitute(env)}
        return eliminate(body, [node.index], caps)
    return IndexPolynomial()


def _top_factors(node: Node) -> Tuple[Node, ...]:
    return node.factors if isinstance(node, Mul) else (node,)


def symbolic_cap(sum_node: Sum) -> Optional[IndexPolynomial]:
    """
    Upper bound on the index of sum_node from its denominators.

    A top-level factor 1/(x;q)_L with L = -s*index + rest, s > 0, vanishes
    once index > rest/s.
    """
    caps = []
    for factor in _top_factors(sum_node.body):
        if not isinstance(factor, Poch) or not factor.in_denominator or factor.length is None:
            continue
        c2, slope, rest = factor.length.linear_parts(sum_node.index)
        if slope.is_constant() and slope.coefficient() < 0:
            caps.append(rest / (-slope.coefficient()))
    return caps[0] if caps else None


def numeric_cap(sum_node: Sum, env: Env) -> Optional[int]:
    """The tightest integer cap on the index of sum_node at fixed outer indices."""
    best: Optional[int] = None
    for factor in _top_factors(sum_node.body):
        if not isinstance(factor, Poch) or not factor.in_denominator or factor.length is None:
            continue
        reduced = factor.length.substitute(env)
        if reduced.variables() - {sum_node.index}:
            continue
        _, slope, rest = reduced.linear_parts(sum_node.index)
        s = slope.coefficient()
        if s < 0:
            cap = math.floor(rest.coefficient() / -s)
            best = cap if best is None else min(best, cap)
    return best


def _only_nonnegative(poly: IndexPolynomial) -> bool:
    return all(c >= 0 for c in poly.terms.values())


def eliminate(
    poly: IndexPolynomial,
    variables: Iterable[str],
    caps: Optional[Mapping[str, IndexPolynomial]] = None,
) -> IndexPolynomial:
    """
    Minimise poly over the given non-negative variables, one at a time.

    Args:
        poly: Polynomial of degree at most 2.
        variables: Variables to remove, in order.
        caps: Optional upper bounds for some variables.

    Returns:
        A polynomial in the remaining variables that bounds poly from
        below for every non-negative value of the removed ones.

    Raises:
        NonTerminatingSum: If a variable can drive poly to minus infinity.
    """
    caps = caps or {}
    for var in variables:
        if var not in poly.variables():
            continue
        c2, c1, c0 = poly.linear_parts(var)
        if not c2.is_constant():
            raise NonTerminatingSum(f"q-exponent bound {poly} is not quadratic in {var}")
        curvature = c2.coefficient()
        cap = caps.get(var)
        if curvature > 0:
            # Minimum over all real values of var.
            poly = c0 - (c1 * c1) / (4 * curvature)
        elif curvature == 0 and _only_nonnegative(c1):
            poly = c0
        elif cap is not None:
            # Concave or decreasing on [0, cap]: the minimum sits at an end.
            at_cap = c2 * cap * cap + c1 * cap + c0
            poly = _coefficientwise_min([c0, at_cap])
        else:
            raise NonTerminatingSum(f"q-exponent bound {poly} is unbounded below in {var}")
    return poly


def bound_in(node: Node, keep: Optional[str], env: Env) -> IndexPolynomial:
    """
    Bound on the valuation of node at fixed outer indices, as a polynomial
    in keep alone (or a constant when keep is None).
    """
    bound = lower_bound(node, env)
    stray = bound.variables() - ({keep} if keep is not None else set())
    if stray:
        raise NonTerminatingSum(f"cannot bound {bound} in {', '.join(sorted(stray))}")
    return bound


def valuation_floor(node: Node, env: Env) -> int:
    """Integer lower bound on the q-valuation of node at the given indices."""
    return math.floor(bound_in(node, None, env).coefficient())


class Cutoff:
    """
    When to stop a sum over index t whose terms have valuation >= g(t),
    g(t) = alpha t^2 + beta t + gamma.

    Attributes:
        alpha, beta, gamma: Coefficients of g.
        cap: Largest index a denominator allows, if any.
    """

    def __init__(self, g: IndexPolynomial, index: str, cap: Optional[int]) -> None:
        mono_sq: Monomial = ((index, 2),)
        mono_lin: Monomial = ((index, 1),)
        self.alpha = g.coefficient(mono_sq)
        self.beta = g.coefficient(mono_lin)
        self.gamma = g.coefficient()
        self.cap = cap
        self.index = index

    def g(self, t: int) -> Fraction:
        return self.alpha * t * t + self.beta * t + self.gamma

    def check_terminates(self, q_order: int) -> None:
        """
        Raises:
            NonTerminatingSum: If neither the bound nor a cap ends the sum.
        """
        if self.cap is not None:
            return
        if self.alpha > 0 or (self.alpha == 0 and self.beta > 0):
            return
        if self.alpha == 0 and self.beta == 0 and self.gamma > q_order:
            return
        raise NonTerminatingSum(
            f"sum over {self.index} does not terminate: term valuations are only bounded by "
            f"{self.alpha}*{self.index}^2 + {self.beta}*{self.index} + {self.gamma}"
        )

    def stops_at(self, t: int, q_order: int) -> bool:
        """True once t and every later index contribute nothing up to q_order."""
        if self.cap is not None and t > self.cap:
            return True
        value = self.g(t)
        if value <= q_order:
            return False
        if self.alpha > 0:
            return t >= -self.beta / (2 * self.alpha)
        if self.alpha == 0:
            return self.beta >= 0
        return False


def cutoff(sum_node: Sum, env: Env, q_order: int) -> Cutoff:
    """
    Cutoff data of sum_node at fixed outer indices.

    Raises:
        NonTerminatingSum: If the sum cannot be truncated at q_order.
    """
    g = bound_in(sum_node.body, sum_node.index, env)
    stray = g.variables() - {sum_node.index}
    if stray:
        raise NonTerminatingSum(f"cannot bound the sum over {sum_node.index} in {', '.join(sorted(stray))}")
    if g.degree_in(sum_node.index) > 2:
        raise NonTerminatingSum(f"q-exponent bound {g} is not quadratic in {sum_node.index}")
    result = Cutoff(g, sum_node.index, numeric_cap(sum_node, env))
    result.check_terminates(q_order)
    return result
