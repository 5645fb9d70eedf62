"""
Concurrent verification of catalog entries.

This module runs a whole catalog (or a chosen subset) through
verify_entry and collects one report per entry. Entries are independent,
so they are spread over worker processes; the output order is always by
entry name, whatever order the workers finish in.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..core.exceptions import CatalogError
from ..dsl.catalog import CatalogEntry, catalog_paths, default_orders, load_entry, verify_entry
from ..utils import config
from .report import VerificationReport, combine_reports, elapsed_ms_since, error_report

logger = logging.getLogger(__name__)


def _checked_orders(entry: CatalogEntry, q_order: Optional[int], a_order: Optional[int]) -> Tuple[int, int]:
    default_q, default_a = default_orders(entry)
    q = default_q if q_order is None else q_order
    a = (default_a if a_order is None else a_order) if entry.is_bivariate else 0
    return q, a or 0


def run_entry(entry: CatalogEntry, q_order: Optional[int], a_order: Optional[int]) -> VerificationReport:
    """
    Verify one entry; any exception becomes a failing report.

    Module level so that worker processes can unpickle it.
    """
    start = time.perf_counter()
    try:
        return verify_entry(entry, q_order, a_order)
    except Exception as e:
        logger.error(f"✗ {entry.name}: {type(e).__name__}: {e}")
        q, a = _checked_orders(entry, q_order, a_order)
        return error_report(entry.name, e, q, a, elapsed_ms_since(start))


class CatalogPipeline:
    """
    Verify catalog entries, optionally in parallel.

    Pipeline steps:
    1. Load the requested .qid files (a file that fails to load becomes
       a failing report instead of stopping the run)
    2. Verify every loaded entry, sequentially or in a process pool
    3. Collect the reports, sorted by entry name

    Attributes:
        q_order: Truncation order in q, None for each entry's default.
        a_order: Truncation order in a for bivariate entries, None for
            the default.
        jobs: Number of worker processes; 1 runs in this process.
        show_progress: Whether to draw a tqdm progress bar on stderr.
        directory: Catalog directory.
        summary: All reports of the last run folded into one, or None
            before the first run.

    Example:
        >>> pipeline = CatalogPipeline(q_order=60, jobs=4)
        >>> reports = pipeline.run()
        >>> all(r.passed for r in reports)
        True
    """

    def __init__(
        self,
        q_order: Optional[int] = None,
        a_order: Optional[int] = None,
        jobs: Optional[int] = None,
        show_progress: bool = False,
        directory: Optional[Path] = None,
    ) -> None:
        """
        Initialize the catalog pipeline.

        Raises:
            ValueError: If an order is negative or jobs is below 1.
        """
        for name, value in (("q_order", q_order), ("a_order", a_order)):
            if value is not None and value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        jobs = config.default_jobs() if jobs is None else jobs
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")

        self.q_order = q_order
        self.a_order = a_order
        self.jobs = jobs
        self.show_progress = show_progress
        self.directory = directory or config.CATALOG_DIR
        self.summary: Optional[VerificationReport] = None

        logger.info(
            f"Initialized CatalogPipeline: "
            f"q_order={q_order if q_order is not None else 'default'}, "
            f"a_order={a_order if a_order is not None else 'default'}, "
            f"jobs={jobs}"
        )

    def _load(self, names: Optional[Sequence[str]]) -> Tuple[List[CatalogEntry], List[VerificationReport]]:
        if names is None:
            paths = catalog_paths(self.directory)
        else:
            paths = [self.directory / f"{name}.qid" for name in names]
        entries: List[CatalogEntry] = []
        failures: List[VerificationReport] = []
        for path in paths:
            try:
                entries.append(load_entry(path))
            except CatalogError as e:
                if not path.is_file():
                    raise
                failures.append(error_report(path.stem, e, self.q_order or 0))
            except ValueError as e:
                failures.append(error_report(path.stem, e, self.q_order or 0))
        return entries, failures

    def _verify_all(self, entries: List[CatalogEntry]) -> Dict[str, VerificationReport]:
        reports: Dict[str, VerificationReport] = {}
        with tqdm(total=len(entries), desc="catalog", unit="entry", disable=not self.show_progress) as bar:
            if self.jobs == 1 or len(entries) <= 1:
                for entry in entries:
                    reports[entry.name] = run_entry(entry, self.q_order, self.a_order)
                    bar.update(1)
                return reports
            with ProcessPoolExecutor(max_workers=min(self.jobs, len(entries))) as pool:
                futures = {
                    pool.submit(run_entry, entry, self.q_order, self.a_order): entry for entry in entries
                }
                for future in as_completed(futures):
                    entry = futures[future]
                    try:
                        reports[entry.name] = future.result()
                    except Exception as e:
                        # The worker itself died (e.g. BrokenProcessPool).
                        q, a = _checked_orders(entry, self.q_order, self.a_order)
                        reports[entry.name] = error_report(entry.name, e, q, a)
                    bar.update(1)
        return reports

    def run(self, names: Optional[Sequence[str]] = None) -> List[VerificationReport]:
        """
        Verify catalog entries.

        Args:
            names: Entry names to run; None runs the whole directory.

        Returns:
            One report per entry, sorted by entry name.

        Raises:
            CatalogError: If the directory is missing or a named entry
                does not exist.
        """
        logger.info("=" * 60)
        logger.info("Starting catalog verification")
        logger.info("=" * 60)
        start = time.perf_counter()

        logger.info("Step 1/3: Loading catalog entries...")
        entries, failures = self._load(names)
        logger.info(f"  {len(entries)} entries loaded, {len(failures)} unreadable")

        logger.info(f"Step 2/3: Verifying with {self.jobs} worker(s)...")
        reports = self._verify_all(entries)

        logger.info("Step 3/3: Collecting reports...")
        for report in failures:
            reports[report.target] = report
        ordered = [reports[name] for name in sorted(reports)]
        for report in ordered:
            logger.debug(report.describe())

        overall = combine_reports("catalog", ordered)
        self.summary = overall
        elapsed = elapsed_ms_since(start)
        if not overall.passed:
            failed = [r.target for r in ordered if not r.passed]
            logger.error("=" * 60)
            logger.error(f"✗ FAILURE: {len(failed)} of {len(ordered)} entries did not pass ({elapsed} ms)")
            logger.error(f"  Failed: {', '.join(failed)}")
            logger.error("=" * 60)
        else:
            logger.info("=" * 60)
            logger.info(
                f"✓ SUCCESS: all {len(ordered)} entries pass, certified to q^{overall.checked_q_order} ({elapsed} ms)"
            )
            logger.info("=" * 60)
        return ordered
