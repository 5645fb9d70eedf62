"""
Expression tree of the identity language.

Nodes are frozen dataclasses so trees compare by value and can be shared
between worker threads. Source positions ride along for error messages
but never take part in comparisons.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from .polynomial import IndexPolynomial

NUMERATOR = "num"
DENOMINATOR = "den"


@dataclass(frozen=True)
class Const:
    value: int
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class QPow:
    """q raised to a polynomial of degree <= 2 in the indices."""

    exponent: IndexPolynomial
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class APow:
    """a raised to an affine integer form in the indices."""

    exponent: IndexPolynomial
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg1Pow:
    exponent: IndexPolynomial
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Poch:
    """
    (sign * a^a_power * q^q_offset ; q^q_step)_length, in numerator or
    denominator position. length None is the infinite product.

    sign follows PochhammerSpec: the base -a*q has sign -1.
    """

    sign: int
    a_power: int
    q_offset: int
    q_step: int
    length: Optional[IndexPolynomial]
    position: str = NUMERATOR
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)

    @property
    def in_denominator(self) -> bool:
        return self.position == DENOMINATOR


@dataclass(frozen=True)
class InfProduct:
    """(x1, x2, ...; q^m)_inf as one node; every factor is an infinite Poch."""

    factors: Tuple[Poch, ...]
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Add:
    terms: Tuple["Node", ...]


@dataclass(frozen=True)
class Mul:
    factors: Tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    """Sum of body over index = lower, lower + 1, ..."""

    index: str
    lower: int
    body: "Node"
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


Node = Union[Const, QPow, APow, Neg1Pow, Poch, InfProduct, Add, Mul, Sum]


@dataclass(frozen=True)
class IdentityAST:
    """
    One identity lhs = rhs.

    Attributes:
        name: Identity name, possibly "entry/reading".
        lhs, rhs: Expression trees.
        variables: Summation indices in order of appearance.
        free_variables: {"a"} when a occurs, else empty.
        provenance: Free-form origin note filled in by the catalog.
    """

    name: str
    lhs: Node
    rhs: Node
    variables: Tuple[str, ...] = ()
    free_variables: FrozenSet[str] = frozenset()
    provenance: str = field(default="", compare=False)


def flip(node: Node) -> Optional[Node]:
    """
    The reciprocal of node when it is a product of reciprocable factors.

    Pochhammer symbols change position, powers of q and a change sign,
    signs stay. Returns None when node has no reciprocal in the language.
    """
    if isinstance(node, Poch):
        position = NUMERATOR if node.in_denominator else DENOMINATOR
        return Poch(node.sign, node.a_power, node.q_offset, node.q_step, node.length, position, node.line, node.column)
    if isinstance(node, InfProduct):
        return InfProduct(tuple(flip(f) for f in node.factors), node.line, node.column)  # type: ignore[misc]
    if isinstance(node, QPow):
        return QPow(-node.exponent, node.line, node.column)
    if isinstance(node, APow):
        return APow(-node.exponent, node.line, node.column)
    if isinstance(node, Neg1Pow):
        return node
    if isinstance(node, Const) and node.value in (1, -1):
        return node
    if isinstance(node, Mul):
        flipped = [flip(f) for f in node.factors]
        if any(f is None for f in flipped):
            return None
        return Mul(tuple(flipped))  # type: ignore[arg-type]
    return None


def make_mul(factors: Iterable[Node]) -> Node:
    """
    Canonical product: nested products flattened and all constants folded
    into one leading constant, which is dropped when it is 1.
    """
    coeff = 1
    rest: List[Node] = []
    for factor in factors:
        parts = factor.factors if isinstance(factor, Mul) else (factor,)
        for part in parts:
            if isinstance(part, Const):
                coeff *= part.value
            else:
                rest.append(part)
    if coeff == 0:
        return Const(0)
    if coeff != 1:
        rest.insert(0, Const(coeff))
    if not rest:
        return Const(1)
    if len(rest) == 1:
        return rest[0]
    return Mul(tuple(rest))


def make_add(terms: Iterable[Node]) -> Node:
    """Canonical sum: nested sums flattened, one-term sums unwrapped."""
    flat: List[Node] = []
    for term in terms:
        flat.extend(term.terms if isinstance(term, Add) else (term,))
    if len(flat) == 1:
        return flat[0]
    return Add(tuple(flat))


def negate(node: Node) -> Node:
    """-node, with the sign folded into a leading constant."""
    if isinstance(node, Const):
        return Const(-node.value, node.line, node.column)
    if isinstance(node, Mul) and isinstance(node.factors[0], Const):
        lead = node.factors[0]
        return make_mul((Const(-lead.value),) + node.factors[1:])
    return make_mul((Const(-1), node))
