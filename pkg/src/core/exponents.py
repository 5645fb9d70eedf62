"""
Half-integer exponent arithmetic.

Exponents such as (3/2)n^2 - (1/2)n are integral for every integer n even
though their coefficients are not. HalfExponent keeps such values exact
(numerator over a fixed denominator of 2) and refuses to turn into an int
unless the value really is integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exceptions import NonIntegerExponent

Number = Union[int, Fraction, "HalfExponent"]


@dataclass(frozen=True, order=True)
class HalfExponent:
    """
    Exact value numerator / 2.

    Attributes:
        numerator: Twice the represented value.

    Example:
        >>> e = HalfExponent.of(Fraction(3, 2)) * 4 - HalfExponent(1)
        >>> e.to_int()
        Traceback (most recent call last):
            ...
        NonIntegerExponent: exponent 11/2 is not an integer
    """

    numerator: int

    @classmethod
    def of(cls, value: Union[int, Fraction, "HalfExponent"]) -> "HalfExponent":
        """
        Build a HalfExponent from an int, a Fraction or another HalfExponent.

        Raises:
            NonIntegerExponent: If value is a Fraction whose denominator
                does not divide 2.
        """
        if isinstance(value, HalfExponent):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a valid exponent")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            doubled = value * 2
            if doubled.denominator != 1:
                raise NonIntegerExponent(
                    f"exponent {value} is not a multiple of 1/2"
                )
            return cls(int(doubled))
        raise TypeError(f"Expected int, Fraction or HalfExponent, got {type(value).__name__}")

    @property
    def is_integral(self) -> bool:
        return self.numerator % 2 == 0

    def to_int(self) -> int:
        """
        Return the exact integer value.

        Raises:
            NonIntegerExponent: If the value is an odd multiple of 1/2.
        """
        if not self.is_integral:
            raise NonIntegerExponent(f"exponent {self.numerator}/2 is not an integer")
        return self.numerator // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 2)

    def __add__(self, other: Number) -> "HalfExponent":
        return HalfExponent(self.numerator + HalfExponent.of(other).numerator)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "HalfExponent":
        return HalfExponent(self.numerator - HalfExponent.of(other).numerator)

    def __rsub__(self, other: Number) -> "HalfExponent":
        return HalfExponent(HalfExponent.of(other).numerator - self.numerator)

    def __neg__(self) -> "HalfExponent":
        return HalfExponent(-self.numerator)

    def __mul__(self, factor: int) -> "HalfExponent":
        if not isinstance(factor, int) or isinstance(factor, bool):
            raise TypeError("HalfExponent can only be scaled by an int")
        return HalfExponent(self.numerator * factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.numerator // 2)
        return f"{self.numerator}/2"


def quadratic_exponent(A: HalfExponent, B: HalfExponent, n: int, C: Number = 0) -> int:
    """
    Evaluate A*n^2 + B*n + C and return it as an int.

    Raises:
        NonIntegerExponent: If the total is not integral.
    """
    return (A * (n * n) + B * n + HalfExponent.of(C)).to_int()
