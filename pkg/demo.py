#!/usr/bin/env python3
"""
Demo script for qrrt.

Walks through the main pieces:
- Rogers-Ramanujan through the identity language
- The mod 14 triple of Rogers through the catalog
- A Bailey pair against its closed form
- The d-extended Gordon counts
"""

import logging

from src.bailey import DKParams, verify_bailey_pair
from src.core.series import Orders, format_series
from src.dsl import evaluate, find_entry, parse, verify, verify_entry
from src.partitions import PartitionConstraint, verify_gordon_theorem

# Set up logging
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)

logger = logging.getLogger(__name__)

RR1 = "rr1: sum(n>=0, q^(n^2)/poch(q;q;n)) = 1/infprod(q,q^4;q^5)"


def _mark(passed: bool) -> str:
    return "✓" if passed else "✗"


def main():
    """Run a short tour of the toolkit."""
    logger.info("=" * 60)
    logger.info("qrrt - Demo Script")
    logger.info("=" * 60)

    # Demo 1: one identity from text
    logger.info("\n### Demo 1: Rogers-Ramanujan from text ###")
    identity = parse(RR1)
    lhs = evaluate(identity.lhs, 12)
    logger.info(f"  lhs = {format_series(lhs)}")
    report = verify(identity, 100)
    logger.info(report.describe())

    # Demo 2: catalog entries
    logger.info("\n### Demo 2: The mod 14 triple ###")
    for name in ("slater-59", "slater-60", "slater-61"):
        entry = find_entry(name)
        report = verify_entry(entry, q_order=60)
        logger.info(f"{_mark(report.passed)} {entry.label}: {report.status}")

    # Demo 3: Bailey pair
    logger.info("\n### Demo 3: Bailey pair (2,4) ###")
    report = verify_bailey_pair(DKParams(2, 4), 8, Orders(40, 10))
    logger.info(report.describe())

    # Demo 4: partition counts
    logger.info("\n### Demo 4: d-extended Gordon theorem, (d,k,i) = (2,3,3) ###")
    report, rows = verify_gordon_theorem(PartitionConstraint(2, 3, 3), 10)
    for row in rows:
        logger.info(f"  {row}")
    logger.info(report.describe())

    logger.info("\n" + "=" * 60)
    logger.info("Demo completed!")
    logger.info("=" * 60)


if __name__ == "__main__":
    main()
