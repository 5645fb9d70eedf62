"""
Verification reports and coefficientwise series comparison.

Every check in the toolkit ends in a VerificationReport: which target was
checked, whether it passed, up to which orders, and, on failure, the
first coefficient where the two sides disagree. Reports serialise to a
small JSON document with a fixed key order.
"""

import json
import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.series import TruncatedSeries, min_order

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
AMBIGUOUS = "ambiguous"
STATUSES = (PASS, FAIL, AMBIGUOUS)

JSON_VERSION = 1
ERROR_PREFIX = "error: "


@dataclass(frozen=True)
class Divergence:
    """
    First coefficient where two series disagree.

    Attributes:
        location: Which comparison failed ("n=3", "i=2", "lhs=rhs", ...).
        a_exp: Exponent of a at the mismatch.
        q_exp: Exponent of q at the mismatch.
        lhs_coeff: Coefficient on the left-hand side.
        rhs_coeff: Coefficient on the right-hand side.
    """

    location: str
    a_exp: int
    q_exp: int
    lhs_coeff: int
    rhs_coeff: int

    @property
    def is_error(self) -> bool:
        """True for the placeholder of a check that raised instead of comparing."""
        return self.location.startswith(ERROR_PREFIX)

    def describe(self) -> str:
        if self.is_error:
            return self.location
        return (
            f"{self.location}: coefficient of a^{self.a_exp} q^{self.q_exp} "
            f"is {self.lhs_coeff} on the left and {self.rhs_coeff} on the right"
        )


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of one verification target.

    Attributes:
        target: Name of what was checked.
        status: "pass", "fail" or "ambiguous".
        checked_q_order: q-order up to which equality was certified.
        checked_a_order: a-order certified (0 for univariate checks).
        first_divergence: Present exactly when status is "fail".
        elapsed_ms: Wall time of the check in milliseconds.
        note: Free-form detail (which reading held, which relation).
    """

    target: str
    status: str
    checked_q_order: int
    checked_a_order: int
    first_divergence: Optional[Divergence] = None
    elapsed_ms: int = 0
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"Invalid status {self.status!r}, expected one of {STATUSES}")
        if (self.status == FAIL) != (self.first_divergence is not None):
            raise ValueError("a report carries a divergence exactly when it fails")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def describe(self) -> str:
        """One human-readable line with a ✓/✗ marker."""
        mark = "✓" if self.passed else "✗"
        orders = f"q^{self.checked_q_order}"
        if self.checked_a_order:
            orders += f", a^{self.checked_a_order}"
        line = f"{mark} {self.target}: {self.status} ({orders}, {self.elapsed_ms} ms)"
        if self.first_divergence is not None:
            line += f" - {self.first_divergence.describe()}"
        if self.note:
            line += f" [{self.note}]"
        return line

    def to_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "name": self.target,
            "status": self.status,
            "q_order": self.checked_q_order,
            "a_order": self.checked_a_order,
        }
        if self.first_divergence is not None:
            d = self.first_divergence
            record["first_divergence"] = {
                "location": d.location,
                "a_exp": d.a_exp,
                "q_exp": d.q_exp,
                "lhs_coeff": d.lhs_coeff,
                "rhs_coeff": d.rhs_coeff,
            }
        record["elapsed_ms"] = self.elapsed_ms
        if self.note:
            record["note"] = self.note
        return record

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "VerificationReport":
        try:
            divergence = None
            if "first_divergence" in record:
                d = record["first_divergence"]
                divergence = Divergence(
                    location=d["location"],
                    a_exp=d["a_exp"],
                    q_exp=d["q_exp"],
                    lhs_coeff=d["lhs_coeff"],
                    rhs_coeff=d["rhs_coeff"],
                )
            return cls(
                target=record["name"],
                status=record["status"],
                checked_q_order=record["q_order"],
                checked_a_order=record["a_order"],
                first_divergence=divergence,
                elapsed_ms=record["elapsed_ms"],
                note=record.get("note", ""),
            )
        except KeyError as e:
            raise ValueError(f"Report record is missing key {e}") from e


def first_divergence(
    lhs: TruncatedSeries, rhs: TruncatedSeries, location: str
) -> Optional[Divergence]:
    """
    Lowest (q, a) position where lhs and rhs differ within their shared window.

    Returns:
        None when the series agree up to the smaller of their orders.
    """
    q_order = min(lhs.q_order, rhs.q_order)
    a_order = min_order(lhs.a_order, rhs.a_order)
    keys = set(lhs.terms) | set(rhs.terms)
    for a_exp, q_exp in sorted(keys, key=lambda k: (k[1], k[0])):
        if q_exp > q_order or (a_order is not None and a_exp > a_order):
            continue
        left = lhs.terms.get((a_exp, q_exp), 0)
        right = rhs.terms.get((a_exp, q_exp), 0)
        if left != right:
            return Divergence(location, a_exp, q_exp, left, right)
    return None


def compare_series(
    target: str,
    comparisons: Iterable[Tuple[str, TruncatedSeries, TruncatedSeries]],
    note: str = "",
) -> VerificationReport:
    """
    Compare pairs of series and stop at the first mismatch.

    Args:
        target: Name recorded in the report.
        comparisons: (location, lhs, rhs) triples. May be a generator, in
            which case building the series counts towards the timing.
        note: Copied into the report.

    Returns:
        A passing report certified to the smallest window seen, or a
        failing report pointing at the first divergence.
    """
    start = time.perf_counter()
    q_order: Optional[int] = None
    a_order: Optional[int] = None
    univariate = True
    for location, lhs, rhs in comparisons:
        pair_q = min(lhs.q_order, rhs.q_order)
        pair_a = min_order(lhs.a_order, rhs.a_order)
        q_order = pair_q if q_order is None else min(q_order, pair_q)
        if pair_a is not None:
            univariate = False
            a_order = pair_a if a_order is None else min(a_order, pair_a)
        divergence = first_divergence(lhs, rhs, location)
        if divergence is not None:
            logger.debug(f"{target}: {divergence.describe()}")
            return VerificationReport(
                target=target,
                status=FAIL,
                checked_q_order=pair_q,
                checked_a_order=0 if pair_a is None else pair_a,
                first_divergence=divergence,
                elapsed_ms=elapsed_ms_since(start),
                note=note,
            )
    return VerificationReport(
        target=target,
        status=PASS,
        checked_q_order=q_order or 0,
        checked_a_order=0 if univariate or a_order is None else a_order,
        elapsed_ms=elapsed_ms_since(start),
        note=note,
    )


def combine_reports(target: str, reports: Sequence[VerificationReport], note: str = "") -> VerificationReport:
    """
    Fold several reports into one: the first failure wins, otherwise a pass
    at the smallest certified orders.
    """
    elapsed = sum(r.elapsed_ms for r in reports)
    for report in reports:
        if report.status == FAIL:
            return VerificationReport(
                target=target,
                status=FAIL,
                checked_q_order=report.checked_q_order,
                checked_a_order=report.checked_a_order,
                first_divergence=report.first_divergence,
                elapsed_ms=elapsed,
                note=note or report.note,
            )
    ambiguous = any(r.status == AMBIGUOUS for r in reports)
    return VerificationReport(
        target=target,
        status=AMBIGUOUS if ambiguous else PASS,
        checked_q_order=min((r.checked_q_order for r in reports), default=0),
        checked_a_order=min((r.checked_a_order for r in reports), default=0),
        elapsed_ms=elapsed,
        note=note,
    )


def error_report(target: str, error: BaseException, q_order: int, a_order: int = 0, elapsed_ms: int = 0) -> VerificationReport:
    """Failing report for a target whose evaluation raised."""
    divergence = Divergence(
        location=f"{ERROR_PREFIX}{type(error).__name__}: {error}",
        a_exp=0,
        q_exp=0,
        lhs_coeff=0,
        rhs_coeff=0,
    )
    return VerificationReport(
        target=target,
        status=FAIL,
        checked_q_order=q_order,
        checked_a_order=a_order,
        first_divergence=divergence,
        elapsed_ms=elapsed_ms,
    )


def emit_json(reports: Iterable[VerificationReport]) -> str:
    """
    Serialise reports as {"version": 1, "reports": [...]}.

    Example:
        >>> emit_json([])
        '{"version":1,"reports":[]}'
    """
    document = {"version": JSON_VERSION, "reports": [r.to_dict() for r in reports]}
    return json.dumps(document, separators=(",", ":"), ensure_ascii=False)


def load_reports(document: str) -> List[VerificationReport]:
    """
    Parse a document produced by emit_json.

    Raises:
        ValueError: On malformed JSON, an unknown version or missing keys.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid report document: {e}") from e
    if not isinstance(data, dict) or data.get("version") != JSON_VERSION:
        raise ValueError(f"Unsupported report document version: {data.get('version') if isinstance(data, dict) else data!r}")
    return [VerificationReport.from_dict(record) for record in data.get("reports", [])]


def elapsed_ms_since(start: float) -> int:
    """Milliseconds since a time.perf_counter() reading."""
    return int(round((time.perf_counter() - start) * 1000))
