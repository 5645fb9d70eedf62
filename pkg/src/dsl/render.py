"""
Trees back to identity text.

The output parses to an equal tree; factor order is preserved and
denominators are written as "/" followed by the numerator form.
"""

from typing import Union

from .nodes import Add, APow, Const, IdentityAST, InfProduct, Mul, Neg1Pow, Node, Poch, QPow, Sum, flip, negate
from .polynomial import IndexPolynomial


def _power(symbol: str, exponent: IndexPolynomial) -> str:
    if exponent.is_constant() and exponent.has_integer_coefficients():
        value = int(exponent.coefficient())
        if value == 1:
            return symbol
        if value >= 0:
            return f"{symbol}^{value}"
    return f"{symbol}^({exponent})"


def _base(sign: int, a_power: int, q_power: int) -> str:
    parts = []
    if a_power:
        parts.append("a" if a_power == 1 else f"a^{a_power}")
    if q_power:
        parts.append("q" if q_power == 1 else f"q^{q_power}")
    body = "*".join(parts) if parts else "1"
    return ("-" if sign < 0 else "") + body


def _is_denominator(node: Node) -> bool:
    if isinstance(node, Poch):
        return node.in_denominator
    if isinstance(node, InfProduct):
        return bool(node.factors) and node.factors[0].in_denominator
    return False


def _is_negative(node: Node) -> bool:
    if isinstance(node, Const):
        return node.value < 0
    return isinstance(node, Mul) and isinstance(node.factors[0], Const) and node.factors[0].value < 0


def _factor(node: Node) -> str:
    text = render_expression(node)
    return f"({text})" if isinstance(node, Add) else text


def _render_mul(node: Mul) -> str:
    factors = list(node.factors)
    text = ""
    if isinstance(factors[0], Const):
        lead = factors.pop(0).value
        text = "-" if lead == -1 else str(lead)
    for factor in factors:
        bare = text in ("", "-")
        if _is_denominator(factor):
            text += ("1" if bare else "") + "/" + _factor(flip(factor))
        else:
            text += ("" if bare else "*") + _factor(factor)
    return text


def render_expression(node: Node) -> str:
    """
    Text for an expression tree.

    Example:
        >>> render_expression(parse_expression("q^(n^2)/poch(q;q;n)"))
        'q^(n^2)/poch(q;q;n)'
    """
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, QPow):
        return _power("q", node.exponent)
    if isinstance(node, APow):
        return _power("a", node.exponent)
    if isinstance(node, Neg1Pow):
        return f"(-1)^({node.exponent})"
    if isinstance(node, Poch):
        if node.length is None:
            return f"infprod({_base(node.sign, node.a_power, node.q_offset)};{_base(1, 0, node.q_step)})"
        body = f"{_base(node.sign, node.a_power, node.q_offset)};{_base(1, 0, node.q_step)};{node.length}"
        return f"poch({body})" if not node.in_denominator else f"1/poch({body})"
    if isinstance(node, InfProduct):
        bases = ",".join(_base(f.sign, f.a_power, f.q_offset) for f in node.factors)
        text = f"infprod({bases};{_base(1, 0, node.factors[0].q_step)})"
        return f"1/{text}" if _is_denominator(node) else text
    if isinstance(node, Sum):
        return f"sum({node.index}>={node.lower},{render_expression(node.body)})"
    if isinstance(node, Mul):
        return _render_mul(node)
    if isinstance(node, Add):
        text = render_expression(node.terms[0])
        for term in node.terms[1:]:
            if _is_negative(term):
                text += "-" + _factor(negate(term))
            else:
                text += "+" + render_expression(term)
        return text
    raise TypeError(f"Unknown node type {type(node).__name__}")


def render(item: Union[IdentityAST, Node]) -> str:
    """Text for an identity ("name: lhs = rhs") or a bare expression."""
    if isinstance(item, IdentityAST):
        return f"{item.name}: {render_expression(item.lhs)} = {render_expression(item.rhs)}"
    return render_expression(item)
