"""
Full-precision runs of every verification target.

These checks run at the default orders and take minutes rather than
seconds; they are marked slow and skipped with: pytest -m "not slow".
"""

import pytest

from src.bailey import SUPPORTED_PAIRS, DKParams, verify_bailey_pair, verify_pentagonal
from src.core.series import Orders
from src.dsl import find_entry, verify_entry
from src.partitions import PartitionConstraint, verify_andrews_gordon, verify_gordon_theorem
from src.qdiff import (
    SUPPORTED_FAMILIES,
    FamilyIndex,
    verify_alternate,
    verify_f_equals_q,
    verify_f_system,
    verify_product_side,
    verify_q_system,
)
from src.verification.pipeline import CatalogPipeline

FULL = Orders(60, 20)

pytestmark = pytest.mark.slow


class TestCatalogAtDefaultOrders:
    """Test suite for the shipped catalog at its default precision."""

    def test_whole_catalog(self):
        """Test that every entry passes at its default orders."""
        pipeline = CatalogPipeline(jobs=1)
        reports = pipeline.run()
        assert pipeline.summary.passed, "\n".join(r.describe() for r in reports if not r.passed)

    @pytest.mark.parametrize("name", ["rr1", "rr2"])
    def test_rogers_ramanujan_to_200(self, name):
        """Test the two Rogers-Ramanujan identities to q^200."""
        report = verify_entry(find_entry(name), 200)
        assert report.passed, report.describe()
        assert report.checked_q_order == 200


class TestBaileyAtDefaultOrders:
    """Test suite for the Bailey pairs at full precision."""

    @pytest.mark.parametrize("d, k", SUPPORTED_PAIRS)
    def test_bailey_pair(self, d, k):
        """Test definitional against closed-form beta_n for n <= 20."""
        report = verify_bailey_pair(DKParams(d, k), 20, FULL)
        assert report.passed, report.describe()

    def test_pentagonal(self):
        """Test the pentagonal series to q^100."""
        report = verify_pentagonal(100)
        assert report.passed, report.describe()


class TestFamiliesAtDefaultOrders:
    """Test suite for the Q and F families at full precision."""

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("k", range(1, 7))
    def test_q_system(self, d, k):
        """Test the Q-family q-difference system."""
        report = verify_q_system(d, k, FULL)
        assert report.passed, report.describe()

    @pytest.mark.parametrize("d, k", SUPPORTED_FAMILIES)
    def test_f_family(self, d, k):
        """Test the F-family system and F = Q."""
        for report in (verify_f_system(d, k, FULL), verify_f_equals_q(d, k, FULL)):
            assert report.passed, report.describe()

    @pytest.mark.parametrize("d, k", SUPPORTED_FAMILIES)
    def test_products(self, d, k):
        """Test the alternate sum and every product side to q^100."""
        report = verify_alternate(d, k, FULL)
        assert report.passed, report.describe()
        for i in range(1, k + 1):
            report = verify_product_side(FamilyIndex(d, k, i), 100)
            assert report.passed, report.describe()


class TestPartitionsAtDefaultOrders:
    """Test suite for the partition theorems at full size."""

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("k", range(1, 6))
    def test_gordon_theorem(self, d, k):
        """Test A = B for every i and n <= 30."""
        for i in range(1, k + 1):
            report, _ = verify_gordon_theorem(PartitionConstraint(d, k, i), 30)
            assert report.passed, report.describe()

    @pytest.mark.parametrize("k", range(2, 6))
    def test_andrews_gordon(self, k):
        """Test the multisum against its product for every i to q^60."""
        for i in range(1, k + 1):
            report = verify_andrews_gordon(k, i, 60)
            assert report.passed, report.describe()
