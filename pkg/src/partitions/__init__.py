"""
Partitions module for the q-series toolkit.

Enumeration oracles for the d-extended Gordon theorem, the refined counts
b(m, n), their generating functions and the Andrews-Gordon multisum.
"""

from .andrews_gordon import andrews_gordon_lhs, verify_andrews_gordon
from .counting import PartitionConstraint, b_table, count_A, count_b, count_B, counts_A, counts_B
from .generating import (
    BFamily,
    b_genfun,
    gordon_rows,
    verify_B_recurrences,
    verify_gordon_factorization,
    verify_gordon_theorem,
    verify_refined,
)

__all__ = [
    "andrews_gordon_lhs",
    "verify_andrews_gordon",
    "PartitionConstraint",
    "b_table",
    "count_A",
    "count_b",
    "count_B",
    "counts_A",
    "counts_B",
    "BFamily",
    "b_genfun",
    "gordon_rows",
    "verify_B_recurrences",
    "verify_gordon_factorization",
    "verify_gordon_theorem",
    "verify_refined",
]
