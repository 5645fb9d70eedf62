"""
Tests for the partition counts and the generating functions built on them.
"""

import pytest

from src.core.series import Orders
from src.partitions import (
    PartitionConstraint,
    andrews_gordon_lhs,
    b_genfun,
    b_table,
    count_A,
    count_b,
    count_B,
    counts_A,
    counts_B,
    gordon_rows,
    verify_andrews_gordon,
    verify_B_recurrences,
    verify_gordon_factorization,
    verify_gordon_theorem,
    verify_refined,
)
from src.utils.config import MAX_PARTITION_N


def partitions_of(n, largest=None):
    """Yield every partition of n as a non-increasing tuple."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - part, part):
            yield (part,) + rest


def obeys_B(parts, d, k, i):
    freq = {p: parts.count(p) for p in set(parts)}
    if freq.get(d, 0) > i - 1:
        return False
    top = max(parts, default=0)
    for j in range(1, top // d + 1):
        if freq.get(j * d, 0) + freq.get((j + 1) * d, 0) > k - 1:
            return False
    return True


def obeys_A(parts, d, k, i):
    m = (2 * k + 1) * d
    return all(p % m not in (0, (d * i) % m, (-d * i) % m) for p in parts)


class TestPartitionConstraint:
    """Test suite for PartitionConstraint."""

    def test_invalid(self):
        """Test validation of (d, k, i)."""
        with pytest.raises(ValueError, match="1 <= i <= k"):
            PartitionConstraint(1, 2, 0)

    def test_allowed_parts(self):
        """Test the congruence rule for modulus 14."""
        c = PartitionConstraint(2, 3, 3)
        assert not c.allows_part_A(6)
        assert not c.allows_part_A(8)
        assert not c.allows_part_A(14)
        assert c.allows_part_A(7)


class TestCounts:
    """Test suite for the A and B counts."""

    def test_small_values(self):
        """Test hand-checked counts."""
        assert count_A(PartitionConstraint(1, 2, 2), 4) == 2
        assert count_B(PartitionConstraint(2, 3, 3), 4) == 5

    @pytest.mark.parametrize("d, k, i", [(1, 2, 1), (1, 3, 2), (2, 2, 1), (2, 3, 3), (3, 2, 2)])
    def test_against_enumeration(self, d, k, i):
        """Test both counts against a direct filter over all partitions."""
        c = PartitionConstraint(d, k, i)
        n_max = 14
        expected_A = [sum(1 for p in partitions_of(n) if obeys_A(p, d, k, i)) for n in range(n_max + 1)]
        expected_B = [sum(1 for p in partitions_of(n) if obeys_B(p, d, k, i)) for n in range(n_max + 1)]
        assert counts_A(c, n_max) == expected_A
        assert counts_B(c, n_max) == expected_B

    def test_count_b_by_parts(self):
        """Test b(m, n) for the (1,2,1) rules at n = 6: 6 and 4+2."""
        c = PartitionConstraint(1, 2, 1)
        assert count_b(c, 1, 6) == 1
        assert count_b(c, 2, 6) == 1
        assert count_b(c, 3, 6) == 0

    def test_b_table_sums_to_count(self):
        """Test that the histogram adds up to count_B."""
        c = PartitionConstraint(2, 3, 2)
        table = b_table(c, 12)
        assert sum(v for (m, n), v in table.items() if n == 12) == count_B(c, 12)

    def test_caps(self):
        """Test the enumeration caps."""
        c = PartitionConstraint(1, 2, 1)
        with pytest.raises(ValueError, match="MAX_PARTITION_N"):
            count_B(c, MAX_PARTITION_N + 1)
        with pytest.raises(ValueError, match="MAX_PARTITION_PARTS"):
            b_table(c, 10, 16)

    def test_part_limit(self):
        """Test that m_max drops partitions with too many parts."""
        c = PartitionConstraint(1, 3, 3)
        assert all(m <= 2 for m, _ in b_table(c, 10, 2))
        series = b_genfun(c, 2, 10)
        assert series.a_order == 2


class TestGordon:
    """Test suite for the Gordon-type checks."""

    def test_rows(self):
        """Test the per-n lines."""
        rows = gordon_rows(PartitionConstraint(2, 3, 3), 4)
        assert len(rows) == 5
        assert rows[4] == "n=4: A=5 B=5 ok"

    @pytest.mark.parametrize(
        "d, k, i", [(1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 3, 3), (3, 3, 2), (2, 4, 1)]
    )
    def test_theorem(self, d, k, i):
        """Test A(n) = B(n) up to n = 16."""
        report, rows = verify_gordon_theorem(PartitionConstraint(d, k, i), 16)
        assert report.passed, report.describe()
        assert all(row.endswith(" ok") for row in rows)

    def test_factorization(self):
        """Test the split of B into free parts and a scaled d = 1 count."""
        report = verify_gordon_factorization(PartitionConstraint(2, 2, 1), 20)
        assert report.passed, report.describe()

    @pytest.mark.parametrize("d, k", [(1, 3), (2, 2)])
    def test_b_recurrences(self, d, k):
        """Test the q-difference system on enumerated data."""
        report = verify_B_recurrences(PartitionConstraint(d, k, 1), Orders(14, 5))
        assert report.passed, report.describe()

    @pytest.mark.parametrize("d, k, i", [(1, 2, 1), (2, 3, 2)])
    def test_refined(self, d, k, i):
        """Test b(m, n) against the coefficients of Q_{d,k,i}."""
        report = verify_refined(PartitionConstraint(d, k, i), Orders(12, 6))
        assert report.passed, report.describe()


class TestAndrewsGordon:
    """Test suite for the Andrews-Gordon multisum."""

    def test_k2_is_rogers_ramanujan(self):
        """Test the single sum for k = 2, i = 2."""
        assert andrews_gordon_lhs(2, 2, 10).coefficients() == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]

    @pytest.mark.parametrize("k, i", [(2, 1), (3, 1), (3, 2), (3, 3), (4, 2)])
    def test_identity(self, k, i):
        """Test multisum = product side."""
        report = verify_andrews_gordon(k, i, 30)
        assert report.passed, report.describe()

    def test_invalid(self):
        """Test k and i validation."""
        with pytest.raises(ValueError, match="k must be >= 2"):
            andrews_gordon_lhs(1, 1, 5)

