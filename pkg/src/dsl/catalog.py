"""
The shipped identity catalog.

Each entry is a plain-text .qid file: a header block of "# key: value"
lines followed by one or more identity lines. An identity may continue
on following lines that start with whitespace.

    # name: rr1
    # label: Rogers-Ramanujan, first identity
    # provenance: (d,k) = (1,2) through the weak Bailey lemma
    # slater: 18
    # variables:
    rr1: sum(n>=0, q^(n^2)/poch(q;q;n))
        = infprod(q^2,q^3,q^5;q^5)/infprod(q;q)

An entry with several readings names them "entry/reading"; it passes
when exactly one reading holds.
"""

import logging
import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from ..core.exceptions import CatalogError, ParseError, ValidationError
from ..utils import config
from ..verification.report import AMBIGUOUS, FAIL, PASS, VerificationReport, elapsed_ms_since
from .evaluator import verify
from .nodes import IdentityAST
from .parser import parse

logger = logging.getLogger(__name__)

CATALOG_SUFFIX = ".qid"
HEADER_KEYS = ("name", "label", "provenance", "slater", "variables")
REQUIRED_KEYS = ("name", "label")


@dataclass(frozen=True)
class CatalogEntry:
    """
    One catalog file.

    Attributes:
        name: Stable entry name ("rr1", "mod33-3", ...).
        label: Human-readable description.
        provenance: (d, k) pair and lemma the identity comes from.
        slater: Number in Slater's list, if any.
        variables: {"a"} for bivariate entries, else empty.
        readings: (reading, identity) pairs; reading is "" for a plain entry.
        path: File the entry was read from.
    """

    name: str
    label: str
    provenance: str
    slater: Optional[int]
    variables: FrozenSet[str]
    readings: Tuple[Tuple[str, IdentityAST], ...]
    path: Optional[Path] = None

    @property
    def is_bivariate(self) -> bool:
        return "a" in self.variables

    def identity(self, reading: str = "") -> IdentityAST:
        for name, ident in self.readings:
            if name == reading:
                return ident
        raise CatalogError(f"{self.name} has no reading {reading!r}")


def _logical_lines(text: str) -> List[Tuple[int, str]]:
    """Identity lines with continuations joined, tagged with their first line number."""
    out: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if raw[0].isspace() and out:
            first, joined = out[-1]
            out[-1] = (first, f"{joined} {stripped}")
        else:
            out.append((number, stripped))
    return out


def _header(text: str) -> Dict[str, str]:
    values: Dict[str, str] = {}
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped.startswith("#") or ":" not in stripped:
            continue
        key, _, value = stripped[1:].partition(":")
        key = key.strip().lower()
        if key in HEADER_KEYS:
            values[key] = value.strip()
    return values


def parse_entry(text: str, source: str = "<string>", path: Optional[Path] = None) -> CatalogEntry:
    """
    Read one catalog entry from text.

    Raises:
        CatalogError: For missing header keys, identity names that do not
            belong to the entry, or a variables header that disagrees
            with the identities.
        ParseError, ValidationError: For a malformed identity, with the
            line number inside the file.
    """
    header = _header(text)
    missing = [key for key in REQUIRED_KEYS if not header.get(key)]
    if missing:
        raise CatalogError(f"{source}: missing header key(s) {', '.join(missing)}")
    name = header["name"]

    slater: Optional[int] = None
    if header.get("slater"):
        try:
            slater = int(header["slater"])
        except ValueError as e:
            raise CatalogError(f"{source}: slater must be an integer, got {header['slater']!r}") from e

    declared = frozenset(v.strip() for v in header.get("variables", "").split(",") if v.strip())
    if not declared <= {"a"}:
        raise CatalogError(f"{source}: only 'a' may be a free variable, got {sorted(declared)}")

    readings: List[Tuple[str, IdentityAST]] = []
    for line_no, line in _logical_lines(text):
        try:
            identity = parse(line)
        except (ParseError, ValidationError) as e:
            raise type(e)(f"{source}: {e.message}", line_no, e.column) from e
        entry_name, _, reading = identity.name.partition("/")
        if entry_name != name:
            raise CatalogError(f"{source}:{line_no}: identity {identity.name!r} does not belong to entry {name!r}")
        if any(reading == r for r, _ in readings):
            raise CatalogError(f"{source}:{line_no}: reading {reading or name!r} appears twice")
        if identity.free_variables != declared:
            raise CatalogError(
                f"{source}:{line_no}: identity uses {sorted(identity.free_variables)} "
                f"but the header declares {sorted(declared)}"
            )
        readings.append((reading, replace(identity, provenance=header.get("provenance", ""))))
    if not readings:
        raise CatalogError(f"{source}: no identity in entry {name!r}")
    if len(readings) > 1 and any(r == "" for r, _ in readings):
        raise CatalogError(f"{source}: an entry with several identities must name every reading")

    return CatalogEntry(
        name=name,
        label=header["label"],
        provenance=header.get("provenance", ""),
        slater=slater,
        variables=declared,
        readings=tuple(readings),
        path=path,
    )


def load_entry(path: Path) -> CatalogEntry:
    """
    Read a .qid file.

    Raises:
        CatalogError: If the file cannot be read or is malformed.
    """
    if not isinstance(path, Path):
        raise TypeError(f"path must be pathlib.Path, got {type(path).__name__}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CatalogError(f"Cannot read catalog file {path}: {e}") from e
    entry = parse_entry(text, source=path.name, path=path)
    if entry.name != path.stem:
        raise CatalogError(f"{path.name}: entry name {entry.name!r} does not match the file name")
    return entry


def catalog_paths(directory: Optional[Path] = None) -> List[Path]:
    directory = directory or config.CATALOG_DIR
    if not directory.is_dir():
        raise CatalogError(f"Catalog directory {directory} does not exist")
    return sorted(directory.glob(f"*{CATALOG_SUFFIX}"))


def load_catalog(directory: Optional[Path] = None) -> Dict[str, CatalogEntry]:
    """All entries of a catalog directory, keyed and ordered by name."""
    entries = {}
    for path in catalog_paths(directory):
        entry = load_entry(path)
        entries[entry.name] = entry
    logger.info(f"Loaded {len(entries)} catalog entries from {directory or config.CATALOG_DIR}")
    return dict(sorted(entries.items()))


def find_entry(target: Union[str, Path], directory: Optional[Path] = None) -> CatalogEntry:
    """
    Resolve a catalog name or a path to a .qid file.

    Raises:
        CatalogError: For an unknown name.
    """
    path = Path(target)
    if path.suffix == CATALOG_SUFFIX and path.is_file():
        return load_entry(path)
    candidate = (directory or config.CATALOG_DIR) / f"{target}{CATALOG_SUFFIX}"
    if candidate.is_file():
        return load_entry(candidate)
    raise CatalogError(f"Unknown catalog entry {str(target)!r}")


def default_orders(entry: CatalogEntry) -> Tuple[int, Optional[int]]:
    """(q_order, a_order) used when the caller gives none."""
    if entry.is_bivariate:
        return config.default_bivariate_q_order(), config.default_a_order()
    return config.default_q_order(), None


def verify_entry(
    entry: CatalogEntry, q_order: Optional[int] = None, a_order: Optional[int] = None
) -> VerificationReport:
    """
    Verify every reading of an entry.

    Returns:
        One report named after the entry. With several readings the note
        records each reading's outcome, e.g. "paired: pass; literal: fail".
    """
    default_q, default_a = default_orders(entry)
    q_order = default_q if q_order is None else q_order
    a_order = (default_a if a_order is None else a_order) if entry.is_bivariate else None

    start = time.perf_counter()
    results = [(reading, verify(identity, q_order, a_order)) for reading, identity in entry.readings]
    if len(results) == 1:
        return replace(results[0][1], target=entry.name, elapsed_ms=elapsed_ms_since(start))

    holding = [report for _, report in results if report.passed]
    note = "; ".join(f"{reading}: {report.status}" for reading, report in results)
    if len(holding) == 1:
        status, divergence, basis = PASS, None, holding[0]
    elif holding:
        status, divergence, basis = AMBIGUOUS, None, holding[0]
    else:
        reading, basis = results[0]
        status = FAIL
        divergence = replace(basis.first_divergence, location=f"{reading}: {basis.first_divergence.location}")
    logger.debug(f"{entry.name}: {note}")
    return VerificationReport(
        target=entry.name,
        status=status,
        checked_q_order=basis.checked_q_order,
        checked_a_order=basis.checked_a_order,
        first_divergence=divergence,
        elapsed_ms=elapsed_ms_since(start),
        note=note,
    )
