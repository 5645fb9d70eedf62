"""
The (d, k) parameter pair that selects a Bailey pair.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..core.exponents import HalfExponent

# Pairs with a closed-form beta; every other (d, k) still has the
# definitional beta.
SUPPORTED_PAIRS: Tuple[Tuple[int, int], ...] = (
    (1, 1),
    (1, 2),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
    (3, 4),
    (3, 5),
    (4, 6),
)


@dataclass(frozen=True, order=True)
class DKParams:
    """
    Parameters (d, k) of the parametrized Bailey pair.

    Attributes:
        d: Positive integer; alpha_m vanishes unless d divides m.
        k: Positive integer.

    Example:
        >>> DKParams(2, 4).lambda_
        3
    """

    d: int
    k: int

    def __post_init__(self) -> None:
        for name, value in (("d", self.d), ("k", self.k)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be int, got {type(value).__name__}")
            if value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")

    @property
    def lambda_(self) -> int:
        """d(2k + 1 - 3d)/2, always an integer."""
        return self.d * (2 * self.k + 1 - 3 * self.d) // 2

    @property
    def alpha_quadratic(self) -> HalfExponent:
        """dk - d^2 + d/2, the r^2 coefficient of alpha's q-exponent."""
        return HalfExponent(2 * self.d * self.k - 2 * self.d * self.d + self.d)

    @property
    def alpha_linear(self) -> HalfExponent:
        """-d/2, the r coefficient of alpha's q-exponent."""
        return HalfExponent(-self.d)

    def alpha_min_exponent(self, r: int) -> int:
        return (self.alpha_quadratic * (r * r) + self.alpha_linear * r).to_int()

    def alpha_curvature_bound(self) -> Fraction:
        """min(c, 0)/d^2: lower bound on alpha's exponent per m^2."""
        c = self.alpha_quadratic.to_fraction()
        return min(c, Fraction(0)) / (self.d * self.d)

    def __str__(self) -> str:
        return f"({self.d},{self.k})"
