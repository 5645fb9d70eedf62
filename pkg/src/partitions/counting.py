"""
Brute-force partition counts for the d-extended Gordon theorem.

A_{d,k,i}(n) counts partitions of n into parts not congruent to
0, di or -di modulo (2k+1)d. B_{d,k,i}(n) counts partitions of n in which
d appears at most i-1 times and, for every j >= 1, dj and d(j+1) appear
together at most k-1 times; parts that are not multiples of d are free.

count_A uses the usual coin-change recursion. The B side is a plain
enumeration of frequency vectors, independent of every series routine in
the package, so it can serve as an oracle for them.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

from ..utils.config import MAX_PARTITION_N, MAX_PARTITION_PARTS

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PartitionConstraint:
    """
    The (d, k, i) rules shared by the A and B counts.

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
        return (2 * self.k + 1) * self.d

    def allows_part_A(self, part: int) -> bool:
        """True when part is not 0 or +-di modulo (2k+1)d."""
        residue = part % self.modulus
        di = self.d * self.i
        return residue not in (0, di % self.modulus, (-di) % self.modulus)

    def __str__(self) -> str:
        return f"({self.d},{self.k},{self.i})"


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > MAX_PARTITION_N:
        raise ValueError(f"n={n} exceeds the enumeration cap MAX_PARTITION_N={MAX_PARTITION_N}")


def count_A(c: PartitionConstraint, n: int) -> int:
    """
    Number of partitions of n into parts allowed by the congruence rule.

    Example:
        >>> count_A(PartitionConstraint(1, 2, 2), 4)
        2
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return counts_A(c, n)[n]


@lru_cache(maxsize=128)
def _b_table(c: PartitionConstraint, n_max: int, m_max: Optional[int]) -> Mapping[Tuple[int, int], int]:
    histogram: Dict[Tuple[int, int], int] = {}
    d, k, i = c.d, c.k, c.i

    def walk(part: int, total: int, parts: int, previous_multiple: int) -> None:
        if part > n_max - total:
            key = (parts, total)
            histogram[key] = histogram.get(key, 0) + 1
            return
        limit = (n_max - total) // part
        is_multiple = part % d == 0
        if is_multiple:
            if part == d:
                limit = min(limit, i - 1)
            else:
                limit = min(limit, k - 1 - previous_multiple)
        if m_max is not None:
            limit = min(limit, m_max - parts)
        for freq in range(limit + 1):
            walk(
                part + 1,
                total + freq * part,
                parts + freq,
                freq if is_multiple else previous_multiple,
            )

    walk(1, 0, 0, 0)
    logger.debug(f"Enumerated B{c} up to n={n_max}: {sum(histogram.values())} partitions")
    return MappingProxyType(histogram)


def b_table(c: PartitionConstraint, n_max: int, m_max: Optional[int] = None) -> Mapping[Tuple[int, int], int]:
    """
    Histogram {(m, n): b(m, n)} of B-partitions of every n <= n_max.

    Args:
        c: The (d, k, i) rules.
        n_max: Largest size enumerated.
        m_max: Optional cap on the number of parts.

    Raises:
        ValueError: If n_max or m_max exceed the configured caps.
    """
    _check_n(n_max)
    if m_max is not None and not 0 <= m_max <= MAX_PARTITION_PARTS:
        raise ValueError(f"m_max={m_max} outside 0..MAX_PARTITION_PARTS={MAX_PARTITION_PARTS}")
    return _b_table(c, n_max, m_max)


def count_B(c: PartitionConstraint, n: int) -> int:
    """
    Number of partitions of n obeying the frequency rule.

    Example:
        >>> count_B(PartitionConstraint(2, 3, 3), 4)
        5
    """
    table = b_table(c, n)
    return sum(count for (m, size), count in table.items() if size == n)


def count_b(c: PartitionConstraint, m: int, n: int) -> int:
    """count_B restricted to partitions with exactly m parts."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return b_table(c, n).get((m, n), 0)


def counts_A(c: PartitionConstraint, n_max: int) -> List[int]:
    """[count_A(c, n) for n = 0..n_max] in one pass."""
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        if not c.allows_part_A(part):
            continue
        for total in range(part, n_max + 1):
            ways[total] += ways[total - part]
    return ways


def counts_B(c: PartitionConstraint, n_max: int) -> List[int]:
    """[count_B(c, n) for n = 0..n_max] from one enumeration."""
    totals = [0] * (n_max + 1)
    for (_, size), count in b_table(c, n_max).items():
        totals[size] += count
    return totals
