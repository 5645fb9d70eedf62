"""
Configuration defaults for the q-series toolkit.

Values are module constants; a few can be overridden through environment
variables read at call time (QRRT_ORDER, QRRT_A_ORDER, QRRT_JOBS,
QRRT_LOG_LEVEL).
"""

import logging
import os
from pathlib import Path
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULT_Q_ORDER = 100  # univariate catalog checks
DEFAULT_BIVARIATE_Q_ORDER = 60  # checks that keep a as a variable
DEFAULT_A_ORDER = 20
MAX_PARTITION_N = 40  # exhaustive enumeration grows exponentially past this
MAX_PARTITION_PARTS = 15
DEFAULT_LOG_LEVEL = "WARNING"

CATALOG_DIR = Path(__file__).resolve().parent.parent / "dsl" / "catalog"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise ValueError(f"Environment variable {name} must be >= {minimum}, got {value}")
    return value


def default_q_order() -> int:
    """Univariate truncation order, QRRT_ORDER if set."""
    return _env_int("QRRT_ORDER", DEFAULT_Q_ORDER)


def default_bivariate_q_order() -> int:
    return _env_int("QRRT_ORDER", DEFAULT_BIVARIATE_Q_ORDER)


def default_a_order() -> int:
    return _env_int("QRRT_A_ORDER", DEFAULT_A_ORDER)


def default_jobs() -> int:
    """Catalog parallelism: QRRT_JOBS, else the number of CPUs."""
    return _env_int("QRRT_JOBS", os.cpu_count() or 1, minimum=1)


def log_level(verbose: bool = False, quiet: bool = False) -> int:
    """
    Resolve the logging level for an entry point.

    --verbose wins over --quiet; otherwise QRRT_LOG_LEVEL or WARNING.

    Raises:
        ValueError: If QRRT_LOG_LEVEL names no logging level.
    """
    if verbose:
        return logging.DEBUG
    if quiet:
        return logging.ERROR
    name = os.environ.get("QRRT_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"Environment variable QRRT_LOG_LEVEL has unknown level {name!r}")
    return level


def configure_logging(level: Optional[int] = None) -> None:
    """basicConfig with the project's log format."""
    logging.basicConfig(level=level if level is not None else log_level(), format=LOG_FORMAT)
