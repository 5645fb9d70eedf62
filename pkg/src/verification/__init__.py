"""
Verification module for the q-series toolkit.

Reports, coefficientwise comparison and JSON emission. The concurrent
catalog runner lives in ``src.verification.pipeline``.
"""

from .report import (
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

__all__ = [
    "AMBIGUOUS",
    "FAIL",
    "PASS",
    "Divergence",
    "VerificationReport",
    "combine_reports",
    "compare_series",
    "emit_json",
    "error_report",
    "first_divergence",
    "load_reports",
]
