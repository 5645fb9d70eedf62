"""Utilities module for the q-series toolkit: configuration and environment overrides."""

from .config import (
    CATALOG_DIR,
    DEFAULT_A_ORDER,
    DEFAULT_BIVARIATE_Q_ORDER,
    DEFAULT_Q_ORDER,
    MAX_PARTITION_N,
    MAX_PARTITION_PARTS,
    configure_logging,
    default_a_order,
    default_bivariate_q_order,
    default_jobs,
    default_q_order,
    log_level,
)

__all__ = [
    "CATALOG_DIR",
    "DEFAULT_A_ORDER",
    "DEFAULT_BIVARIATE_Q_ORDER",
    "DEFAULT_Q_ORDER",
    "MAX_PARTITION_N",
    "MAX_PARTITION_PARTS",
    "configure_logging",
    "default_a_order",
    "default_bivariate_q_order",
    "default_jobs",
    "default_q_order",
    "log_level",
]
