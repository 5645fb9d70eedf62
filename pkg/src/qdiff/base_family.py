"""
Abstract base class for families of series in a indexed by i = 1..k.

Every family here (the Q family, the closed-form F families and the
partition generating functions) satisfies the same system of
q-difference equations

    X_1(a) = X_k(aq^d) / (aq;q)_(d-1)
    X_i(a) = X_(i-1)(a) + a^(i-1) q^((i-1)d) X_(k-i+1)(aq^d) / (aq;q)_(d-1)

for 2 <= i <= k. Subclasses only supply member(i, orders); checking the
system is shared.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict

from ..core.series import Orders, TruncatedSeries
from ..verification.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class FamilyIndex:
    """
    Index (d, k, i) of one member of a family.

    Raises:
        ValueError: Unless d, k >= 1 and 1 <= i <= k.
    """

    d: int
    k: int
    i: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 1:
            raise ValueError(f"d and k must be >= 1, got d={self.d}, k={self.k}")
        if not 1 <= self.i <= self.k:
            raise ValueError(f"i must satisfy 1 <= i <= k={self.k}, got {self.i}")

    @property
    def modulus(self) -> int:
        """(2k + 1) d, the modulus of the product side."""
        return (2 * self.k + 1) * self.d

    def __str__(self) -> str:
        return f"({self.d},{self.k},{self.i})"


class BaseFamily(ABC):
    """
    Abstract base class for a (d, k) family X_1, ..., X_k.

    Attributes:
        d: Shift parameter; the recurrences substitute a -> aq^d.
        k: Number of members.
        name: Short label used in report targets.
    """

    name = "family"

    def __init__(self, d: int, k: int) -> None:
        if d < 1 or k < 1:
            raise ValueError(f"d and k must be >= 1, got d={d}, k={k}")
        self.d = d
        self.k = k

    @abstractmethod
    def member(self, i: int, orders: Orders) -> TruncatedSeries:
        """
        Series X_i(a, q) truncated to orders.

        Args:
            i: Member index, 1 <= i <= k.
            orders: Truncation bounds.

        Raises:
            ValueError: If i is out of range.
        """

    def index(self, i: int) -> FamilyIndex:
        return FamilyIndex(self.d, self.k, i)

    def members(self, orders: Orders) -> Dict[int, TruncatedSeries]:
        """All members at the same orders."""
        return {i: self.member(i, orders) for i in range(1, self.k + 1)}

    def verify_system(self, orders: Orders) -> VerificationReport:
        """
        Check the q-difference system coefficientwise.

        Returns:
            A report with target "<name>(d,k)"; a failing relation shows up
            as location "i=<index>".
        """
        from .systems import verify_recurrences

        return verify_recurrences(self, orders)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(d={self.d}, k={self.k})"
