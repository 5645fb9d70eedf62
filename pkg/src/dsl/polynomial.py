"""
Polynomials in summation indices with exact rational coefficients.

Exponents and Pochhammer lengths in identity text are polynomials in the
bound indices: q^(n^2+3*n*r/2), poch(q;q;n-2*r). IndexPolynomial keeps
them symbolic so the parser can check their shape and the evaluator can
derive summation cutoffs before plugging in values.
"""

import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

# A monomial is a sorted tuple of (variable, power) pairs; () is the constant.
Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    powers: Dict[str, int] = dict(m1)
    for var, power in m2:
        powers[var] = powers.get(var, 0) + power
    return tuple(sorted(powers.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(power for _, power in m)


class IndexPolynomial:
    """
    Immutable multivariate polynomial over Fraction.

    Example:
        >>> n = IndexPolynomial.variable("n")
        >>> str(n * n * Fraction(3, 2) - n / 2)
        '3/2*n^2-1/2*n'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        cleaned: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[mono] = coeff
        self._terms = cleaned

    @classmethod
    def constant(cls, value: Scalar) -> "IndexPolynomial":
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> "IndexPolynomial":
        return cls({((name, 1),): 1})

    @classmethod
    def _coerce(cls, value: Union["IndexPolynomial", Scalar]) -> "IndexPolynomial":
        if isinstance(value, IndexPolynomial):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"Expected IndexPolynomial, int or Fraction, got {type(value).__name__}")

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=_term_order))

    def coefficient(self, mono: Monomial = ()) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> FrozenSet[str]:
        return frozenset(var for mono in self._terms for var, _ in mono)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree 0."""
        return max((_mono_degree(m) for m in self._terms), default=0)

    def degree_in(self, var: str) -> int:
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def is_affine(self) -> bool:
        return self.degree() <= 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def has_half_integer_coefficients(self) -> bool:
        return all(2 % c.denominator == 0 for c in self._terms.values())

    def __add__(self, other: Union["IndexPolynomial", Scalar]) -> "IndexPolynomial":
        other = self._coerce(other)
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return IndexPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "IndexPolynomial":
        return IndexPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["IndexPolynomial", Scalar]) -> "IndexPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "IndexPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Union["IndexPolynomial", Scalar]) -> "IndexPolynomial":
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return IndexPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, divisor: Scalar) -> "IndexPolynomial":
        if isinstance(divisor, IndexPolynomial):
            raise TypeError("an index polynomial can only be divided by a number")
        if divisor == 0:
            raise ZeroDivisionError("division of an index polynomial by zero")
        return IndexPolynomial({m: c / Fraction(divisor) for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "IndexPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = IndexPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, values: Mapping[str, Scalar]) -> "IndexPolynomial":
        """Plug in the variables present in values; the others stay symbolic."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            kept = []
            for var, power in mono:
                if var in values:
                    coeff *= Fraction(values[var]) ** power
                else:
                    kept.append((var, power))
            key = tuple(kept)
            out[key] = out.get(key, Fraction(0)) + coeff
        return IndexPolynomial(out)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """
        Value at a full assignment.

        Raises:
            KeyError: If a variable has no value.
        """
        reduced = self.substitute(values)
        missing = reduced.variables()
        if missing:
            raise KeyError(f"no value for {', '.join(sorted(missing))}")
        return reduced.coefficient()

    def linear_parts(self, var: str) -> Tuple["IndexPolynomial", "IndexPolynomial", "IndexPolynomial"]:
        """
        Split as c2*var^2 + c1*var + c0 with var-free c2, c1, c0.

        Raises:
            ValueError: If var appears with power above 2.
        """
        parts: List[Dict[Monomial, Fraction]] = [{}, {}, {}]
        for mono, coeff in self._terms.items():
            powers = dict(mono)
            power = powers.pop(var, 0)
            if power > 2:
                raise ValueError(f"{var} appears with power {power} in {self}")
            rest = tuple(sorted(powers.items()))
            parts[power][rest] = parts[power].get(rest, Fraction(0)) + coeff
        c0, c1, c2 = (IndexPolynomial(p) for p in parts)
        return c2, c1, c0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = IndexPolynomial.constant(other)
        if not isinstance(other, IndexPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in self:
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            factors = [var if power == 1 else f"{var}^{power}" for var, power in mono]
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return f"IndexPolynomial({self})"


def _term_order(item: Tuple[Monomial, Fraction]) -> Tuple[int, Monomial]:
    mono, _ = item
    return (-_mono_degree(mono), mono)
