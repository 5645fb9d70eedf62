"""
Text to expression trees.

parse() reads one identity "name: lhs = rhs", parse_expression() a bare
expression. Both return canonical trees and check every structural rule
before returning:

- each summation index is bound by exactly one enclosing sum and is
  neither "a" nor "q";
- q-exponents have degree at most 2 with half-integer coefficients;
  a-exponents, (-1)-exponents and Pochhammer lengths are affine with
  integer coefficients;
- denominator Pochhammer symbols start at q^1 or higher, so they are
  invertible as power series.
"""

import logging
from typing import List, NamedTuple, Sequence, Set, Tuple

from lark import Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from ..core.exceptions import ParseError, QSeriesError, ValidationError
from .grammar import get_parser
from .nodes import (
    DENOMINATOR,
    NUMERATOR,
    Add,
    APow,
    Const,
    IdentityAST,
    InfProduct,
    Mul,
    Neg1Pow,
    Node,
    Poch,
    QPow,
    Sum,
    flip,
    make_add,
    make_mul,
    negate,
)
from .polynomial import IndexPolynomial

logger = logging.getLogger(__name__)

RESERVED_NAMES = frozenset({"a", "q"})


class _Base(NamedTuple):
    """A Pochhammer base sign * a^a_power * q^q_power."""

    sign: int
    a_power: int
    q_power: int


@v_args(meta=True)
class _TreeBuilder(Transformer):
    """Turns the lark parse tree into nodes; shape checks that need no context live here."""

    def identity(self, meta, children) -> IdentityAST:
        name, lhs, rhs = children
        return IdentityAST(name=str(name), lhs=lhs, rhs=rhs)

    def add(self, meta, children) -> Node:
        return make_add(children)

    def sub(self, meta, children) -> Node:
        left, right = children
        return make_add([left, negate(right)])

    def mul(self, meta, children) -> Node:
        return make_mul(children)

    def div(self, meta, children) -> Node:
        left, right = children
        flipped = flip(right)
        if flipped is None:
            raise ValidationError(
                "only products of Pochhammer symbols, powers and signs can be divided by",
                meta.line,
                meta.column,
            )
        return make_mul([left, flipped])

    def neg(self, meta, children) -> Node:
        return negate(children[0])

    def number(self, meta, children) -> Node:
        return Const(int(children[0]), meta.line, meta.column)

    def sum(self, meta, children) -> Node:
        index, lower, body = children
        if str(index) in RESERVED_NAMES:
            raise ValidationError(f"{index} cannot be used as a summation index", index.line, index.column)
        return Sum(str(index), int(lower), body, meta.line, meta.column)

    def qpow(self, meta, children) -> Node:
        exponent = children[0] if children[0] is not None else IndexPolynomial.constant(1)
        return QPow(exponent, meta.line, meta.column)

    def apow(self, meta, children) -> Node:
        exponent = children[0] if children[0] is not None else IndexPolynomial.constant(1)
        _require_affine(exponent, "a-exponent", meta)
        return APow(exponent, meta.line, meta.column)

    def group(self, meta, children) -> Node:
        inner, exponent = children
        if exponent is None:
            return inner
        if inner != Const(-1):
            raise ValidationError("only (-1) can be raised to a symbolic power", meta.line, meta.column)
        _require_affine(exponent, "(-1)-exponent", meta)
        return Neg1Pow(exponent, meta.line, meta.column)

    def int_power(self, meta, children) -> IndexPolynomial:
        return IndexPolynomial.constant(int(children[0]))

    def poly_power(self, meta, children) -> IndexPolynomial:
        return children[0]

    def poch(self, meta, children) -> Node:
        base, step, length = children
        _require_affine(length, "Pochhammer length", meta)
        q_step = _step_exponent(step, meta)
        return Poch(base.sign, base.a_power, base.q_power, q_step, length, NUMERATOR, meta.line, meta.column)

    def infprod(self, meta, children) -> Node:
        *bases, step = children
        q_step = _step_exponent(step, meta)
        factors = tuple(
            Poch(b.sign, b.a_power, b.q_power, q_step, None, NUMERATOR, meta.line, meta.column) for b in bases
        )
        return InfProduct(factors, meta.line, meta.column)

    def pos_base(self, meta, children) -> _Base:
        return children[0]

    def neg_base(self, meta, children) -> _Base:
        base = children[0]
        return base._replace(sign=-base.sign)

    def bmono(self, meta, children) -> _Base:
        if len(children) == 1 and isinstance(children[0], Token):
            if int(children[0]) != 1:
                raise ValidationError(
                    f"a Pochhammer base must be a monomial in a and q, got {children[0]}", meta.line, meta.column
                )
            return _Base(1, 0, 0)
        a_power = sum(power for var, power in children if var == "a")
        q_power = sum(power for var, power in children if var == "q")
        return _Base(1, a_power, q_power)

    def bq(self, meta, children) -> Tuple[str, int]:
        return ("q", 1 if children[0] is None else int(children[0]))

    def ba(self, meta, children) -> Tuple[str, int]:
        return ("a", 1 if children[0] is None else int(children[0]))

    def padd(self, meta, children) -> IndexPolynomial:
        return children[0] + children[1]

    def psub(self, meta, children) -> IndexPolynomial:
        return children[0] - children[1]

    def pmul(self, meta, children) -> IndexPolynomial:
        return children[0] * children[1]

    def pdiv(self, meta, children) -> IndexPolynomial:
        divisor = int(children[1])
        if divisor == 0:
            raise ValidationError("division by zero in an exponent", meta.line, meta.column)
        return children[0] / divisor

    def pneg(self, meta, children) -> IndexPolynomial:
        return -children[0]

    def ppow(self, meta, children) -> IndexPolynomial:
        return children[0] ** int(children[1])

    def pint(self, meta, children) -> IndexPolynomial:
        return IndexPolynomial.constant(int(children[0]))

    def pvar(self, meta, children) -> IndexPolynomial:
        return IndexPolynomial.variable(str(children[0]))


def _require_affine(poly: IndexPolynomial, what: str, meta) -> None:
    if not poly.is_affine() or not poly.has_integer_coefficients():
        raise ValidationError(
            f"{what} must be affine with integer coefficients, got {poly}", meta.line, meta.column
        )


def _step_exponent(step: _Base, meta) -> int:
    if step.sign != 1 or step.a_power != 0 or step.q_power < 1:
        raise ValidationError("a Pochhammer step must be q^e with e >= 1", meta.line, meta.column)
    return step.q_power


def _run(text: str, start: str):
    if not isinstance(text, str):
        raise TypeError(f"Expected str, got {type(text).__name__}")
    try:
        tree = get_parser().parse(text, start=start)
    except UnexpectedInput as e:
        raise ParseError(_describe(e), e.line, e.column) from e
    try:
        return _TreeBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, QSeriesError):
            raise e.orig_exc from None
        raise


def _describe(error: UnexpectedInput) -> str:
    if isinstance(error, UnexpectedToken):
        if error.token.type == "$END":
            return "unexpected end of input"
        return f"unexpected token {str(error.token)!r}"
    if isinstance(error, UnexpectedCharacters):
        return f"unexpected character {error.char!r}"
    if isinstance(error, UnexpectedEOF):
        return "unexpected end of input"
    return "invalid identity text"


def _check(node: Node, bound: Tuple[str, ...], order: List[str]) -> None:
    """Walk node with the indices bound so far; order collects sums in appearance order."""
    if isinstance(node, Sum):
        if node.index in bound:
            raise ValidationError(f"index {node.index} is bound twice", node.line, node.column)
        if node.index not in order:
            order.append(node.index)
        _check(node.body, bound + (node.index,), order)
    elif isinstance(node, (Add, Mul)):
        for child in node.terms if isinstance(node, Add) else node.factors:
            _check(child, bound, order)
    elif isinstance(node, QPow):
        _check_bound(node.exponent, bound, node)
        if node.exponent.degree() > 2:
            raise ValidationError(f"q-exponent {node.exponent} is not quadratic", node.line, node.column)
        if not node.exponent.has_half_integer_coefficients():
            raise ValidationError(
                f"q-exponent {node.exponent} needs half-integer coefficients", node.line, node.column
            )
    elif isinstance(node, (APow, Neg1Pow)):
        _check_bound(node.exponent, bound, node)
    elif isinstance(node, InfProduct):
        for factor in node.factors:
            _check_poch(factor, bound)
    elif isinstance(node, Poch):
        _check_poch(node, bound)


def _check_bound(poly: IndexPolynomial, bound: Sequence[str], node) -> None:
    unbound = sorted(poly.variables() - set(bound))
    if unbound:
        raise ValidationError(f"unbound index {unbound[0]}", node.line, node.column)


def _check_poch(node: Poch, bound: Tuple[str, ...]) -> None:
    if node.length is not None:
        _check_bound(node.length, bound, node)
    if node.position == DENOMINATOR and node.q_offset < 1:
        raise ValidationError(
            "a Pochhammer symbol in a denominator must start at q^1 or higher", node.line, node.column
        )
    if node.length is None and node.q_offset < 1 and node.a_power == 0:
        raise ValidationError("an infinite product must start at q^1 or higher", node.line, node.column)


def uses_a(node: Node) -> bool:
    """True when a occurs anywhere in node."""
    if isinstance(node, APow):
        return True
    if isinstance(node, Poch):
        return node.a_power > 0
    if isinstance(node, InfProduct):
        return any(f.a_power > 0 for f in node.factors)
    if isinstance(node, Add):
        return any(uses_a(t) for t in node.terms)
    if isinstance(node, Mul):
        return any(uses_a(f) for f in node.factors)
    if isinstance(node, Sum):
        return uses_a(node.body)
    return False


def validate_expression(node: Node) -> Tuple[str, ...]:
    """
    Check the context rules of a closed expression.

    Returns:
        The summation indices in order of appearance.

    Raises:
        ValidationError: On the first violated rule.
    """
    order: List[str] = []
    _check(node, (), order)
    return tuple(order)


def parse(text: str) -> IdentityAST:
    """
    Parse and validate one identity.

    Args:
        text: "name: lhs = rhs".

    Returns:
        The identity with its summation indices and free variables filled in.

    Raises:
        ParseError: If text does not follow the grammar.
        ValidationError: If it parses but breaks a structural rule.

    Example:
        >>> parse("rr1: sum(n>=0, q^(n^2)/poch(q;q;n)) = 1/infprod(q,q^4;q^5)").variables
        ('n',)
    """
    identity = _run(text, "identity")
    variables: List[str] = []
    for index in validate_expression(identity.lhs) + validate_expression(identity.rhs):
        if index not in variables:
            variables.append(index)
    free: Set[str] = {"a"} if uses_a(identity.lhs) or uses_a(identity.rhs) else set()
    logger.debug(f"Parsed identity {identity.name} with indices {variables}")
    return IdentityAST(
        name=identity.name,
        lhs=identity.lhs,
        rhs=identity.rhs,
        variables=tuple(variables),
        free_variables=frozenset(free),
    )


def parse_expression(text: str) -> Node:
    """
    Parse and validate a bare expression such as "poch(q;q;3)".

    Raises:
        ParseError, ValidationError: As for parse.
    """
    node = _run(text, "expr")
    validate_expression(node)
    return node

