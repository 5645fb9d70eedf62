"""
Tests for verification reports and their JSON form.
"""

import json

import pytest

from src.core.exceptions import NonTerminatingSum
from src.core.series import TruncatedSeries
from src.verification.report import (
    AMBIGUOUS,
    FAIL,
    PASS,
    Divergence,
    VerificationReport,
    combine_reports,
    compare_series,
    emit_json,
    error_report,
    first_divergence,
    load_reports,
)


def failing_report():
    divergence = Divergence("lhs=rhs", 0, 5, 2, 3)
    return VerificationReport("rr1-bad", FAIL, 20, 0, divergence, elapsed_ms=4)


class TestVerificationReport:
    """Test suite for VerificationReport."""

    def test_invalid_status(self):
        """Test that only the three statuses are accepted."""
        with pytest.raises(ValueError, match="Invalid status"):
            VerificationReport("x", "maybe", 10, 0)

    def test_fail_needs_divergence(self):
        """Test that a failure carries a divergence and a pass does not."""
        with pytest.raises(ValueError, match="divergence exactly when it fails"):
            VerificationReport("x", FAIL, 10, 0)
        with pytest.raises(ValueError, match="divergence exactly when it fails"):
            VerificationReport("x", PASS, 10, 0, Divergence("n=1", 0, 1, 1, 0))

    def test_describe(self):
        """Test the one-line summaries."""
        passing = VerificationReport("rr1", PASS, 100, 0, elapsed_ms=12)
        assert passing.describe() == "✓ rr1: pass (q^100, 12 ms)"
        bivariate = VerificationReport("a-mod18i", PASS, 60, 20, elapsed_ms=3, note="paired: pass; literal: fail")
        assert bivariate.describe() == "✓ a-mod18i: pass (q^60, a^20, 3 ms) [paired: pass; literal: fail]"
        assert failing_report().describe().startswith("✗ rr1-bad: fail (q^20, 4 ms) - lhs=rhs: coefficient of a^0 q^5")

    def test_json_schema(self):
        """Test key order and contents of the JSON document."""
        document = json.loads(emit_json([VerificationReport("rr1", PASS, 100, 0, elapsed_ms=7), failing_report()]))
        assert document["version"] == 1
        first, second = document["reports"]
        assert list(first) == ["name", "status", "q_order", "a_order", "elapsed_ms"]
        assert list(second) == ["name", "status", "q_order", "a_order", "first_divergence", "elapsed_ms"]
        assert second["first_divergence"] == {
            "location": "lhs=rhs",
            "a_exp": 0,
            "q_exp": 5,
            "lhs_coeff": 2,
            "rhs_coeff": 3,
        }

    def test_empty_document(self):
        """Test the compact empty document."""
        assert emit_json([]) == '{"version":1,"reports":[]}'

    def test_load_back(self):
        """Test that load_reports reads what emit_json writes."""
        reports = [
            VerificationReport("rr1", PASS, 100, 0, elapsed_ms=7),
            failing_report(),
            VerificationReport("dup", AMBIGUOUS, 20, 0, note="one: pass; two: pass"),
        ]
        assert load_reports(emit_json(reports)) == reports

    @pytest.mark.parametrize(
        "document, message",
        [
            ('{"version": 2, "reports": []}', "Unsupported report document version"),
            ("not json", "Invalid report document"),
            ('{"version": 1, "reports": [{"name": "x"}]}', "missing key"),
        ],
    )
    def test_load_errors(self, document, message):
        """Test malformed documents."""
        with pytest.raises(ValueError, match=message):
            load_reports(document)


class TestComparisons:
    """Test suite for first_divergence, compare_series and friends."""

    def test_first_divergence_order(self):
        """Test that the lowest q-exponent wins, then the lowest a-exponent."""
        lhs = TruncatedSeries({(0, 1): 1, (2, 3): 1, (1, 3): 4}, 5, 3)
        rhs = TruncatedSeries({(0, 1): 1, (2, 3): 2, (1, 3): 5}, 5, 3)
        divergence = first_divergence(lhs, rhs, "here")
        assert (divergence.a_exp, divergence.q_exp) == (1, 3)
        assert (divergence.lhs_coeff, divergence.rhs_coeff) == (4, 5)

    def test_window_is_shared(self):
        """Test that terms beyond the smaller order are ignored."""
        lhs = TruncatedSeries({(0, 0): 1, (0, 6): 1}, 6)
        rhs = TruncatedSeries({(0, 0): 1}, 4)
        assert first_divergence(lhs, rhs, "x") is None

    def test_compare_series_orders(self):
        """Test that a pass is certified to the smallest window."""
        one_q = TruncatedSeries({(0, 0): 1}, 8)
        report = compare_series("t", [("a", one_q, one_q), ("b", one_q.truncate(5), one_q)], note="two")
        assert report.status == PASS
        assert report.checked_q_order == 5
        assert report.checked_a_order == 0
        assert report.note == "two"

    def test_compare_series_stops(self):
        """Test that the first mismatch ends the comparison."""

        def comparisons():
            yield "first", TruncatedSeries({(0, 2): 1}, 4), TruncatedSeries({}, 4)
            raise AssertionError("compare_series kept going")

        report = compare_series("t", comparisons())
        assert report.first_divergence.location == "first"

    def test_combine(self):
        """Test folding of several reports."""
        good = VerificationReport("a", PASS, 30, 5, elapsed_ms=1)
        other = VerificationReport("b", PASS, 20, 4, elapsed_ms=2)
        combined = combine_reports("all", [good, other])
        assert (combined.status, combined.checked_q_order, combined.checked_a_order) == (PASS, 20, 4)
        assert combined.elapsed_ms == 3
        failed = combine_reports("all", [good, failing_report()])
        assert failed.status == FAIL
        assert failed.first_divergence.q_exp == 5

    def test_error_report(self):
        """Test that an exception becomes a failing report."""
        report = error_report("x", NonTerminatingSum("sum over n does not terminate"), 40)
        assert report.status == FAIL
        assert report.first_divergence.location == "error: NonTerminatingSum: sum over n does not terminate"

    def test_error_report_describe(self):
        """Test that an error line names the exception and no coefficient."""
        report = error_report("x", NonTerminatingSum("sum over n does not terminate"), 40)
        assert report.first_divergence.is_error
        assert report.describe() == (
            "✗ x: fail (q^40, 0 ms) - error: NonTerminatingSum: sum over n does not terminate"
        )
        assert not failing_report().first_divergence.is_error
        assert "coefficient of" in failing_report().describe()
