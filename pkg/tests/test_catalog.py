"""
Tests for the shipped identity catalog.
"""

import shutil
import tempfile
from pathlib import Path

import pytest

from src.core.exceptions import CatalogError, ParseError
from src.dsl import (
    CatalogEntry,
    catalog_paths,
    evaluate,
    find_entry,
    load_catalog,
    load_entry,
    parse,
    parse_entry,
    render,
    verify_entry,
)
from src.qdiff import FamilyIndex, product_side
from src.utils.config import CATALOG_DIR

NAMED = [
    "rr1",
    "rr2",
    "a-mod10ss",
    "a-mod18i",
    "mod10ss",
    "mod18",
    "slater-44",
    "slater-46",
    "slater-46-star",
    "slater-59",
    "slater-60",
    "slater-61",
    "slater-90",
    "slater-91",
    "slater-92",
    "slater-93",
]
ALL_NAMES = sorted(path.stem for path in catalog_paths())

HEADER = "# name: {name}\n# label: test entry\n# provenance: tests\n# variables:\n"
RR1_SUM = "sum(n>=0, q^(n^2)/poch(q;q;n))"


def entry_text(name, *lines):
    return HEADER.format(name=name) + "\n".join(lines) + "\n"


class TestCatalogFiles:
    """Test suite for loading catalog files."""

    def setup_method(self):
        """Setup test fixtures."""
        self.temp_dir = Path(tempfile.mkdtemp())

    def teardown_method(self):
        """Cleanup test fixtures."""
        if self.temp_dir.exists():
            shutil.rmtree(self.temp_dir)

    def test_every_named_entry_ships(self):
        """Test that the named identities and the appendix are all present."""
        catalog = load_catalog()
        assert set(NAMED) <= set(catalog)
        assert len(catalog) == 42
        assert list(catalog) == sorted(catalog)

    def test_entry_fields(self):
        """Test header fields of a plain and a bivariate entry."""
        rr1 = find_entry("rr1")
        assert rr1.slater == 18
        assert not rr1.is_bivariate
        assert rr1.path == CATALOG_DIR / "rr1.qid"
        a_mod18i = find_entry("a-mod18i")
        assert a_mod18i.is_bivariate
        assert [reading for reading, _ in a_mod18i.readings] == ["paired", "literal"]

    def test_continuation_lines(self):
        """Test that indented lines continue the previous identity."""
        text = entry_text("cont", f"cont: {RR1_SUM}", "    = infprod(q^2,q^3,q^5;q^5)/infprod(q;q)")
        entry = parse_entry(text)
        assert entry.identity().name == "cont"

    def test_missing_header(self):
        """Test that name and label are required."""
        with pytest.raises(CatalogError, match="missing header key"):
            parse_entry("# name: x\nx: 1 = 1\n")

    def test_foreign_identity(self):
        """Test that an identity must carry the entry's name."""
        with pytest.raises(CatalogError, match="does not belong to entry"):
            parse_entry(entry_text("x", "y: 1 = 1"))

    def test_duplicate_reading(self):
        """Test that a reading may appear once."""
        with pytest.raises(CatalogError, match="appears twice"):
            parse_entry(entry_text("x", "x/one: 1 = 1", "x/one: q = q"))

    def test_unnamed_reading(self):
        """Test that several identities need reading names."""
        with pytest.raises(CatalogError, match="must name every reading"):
            parse_entry(entry_text("x", "x: 1 = 1", "x/two: q = q"))

    def test_undeclared_variable(self):
        """Test that the variables header must match the identities."""
        with pytest.raises(CatalogError, match="header declares"):
            parse_entry(entry_text("x", "x: poch(a*q;q;1) = 1 - a*q"))

    def test_syntax_error_line(self):
        """Test that a syntax error reports its line in the file."""
        with pytest.raises(ParseError) as excinfo:
            parse_entry(entry_text("x", "x: infprod(q^2,q^8;) = 1"), source="x.qid")
        assert excinfo.value.line == 5
        assert str(excinfo.value).startswith("x.qid:")

    def test_load_entry_needs_path(self):
        """Test that load_entry takes a pathlib.Path."""
        with pytest.raises(TypeError, match="pathlib.Path"):
            load_entry(str(CATALOG_DIR / "rr1.qid"))

    def test_file_name_must_match(self):
        """Test that the entry name equals the file stem."""
        path = self.temp_dir / "other.qid"
        path.write_text(entry_text("x", "x: 1 = 1"), encoding="utf-8")
        with pytest.raises(CatalogError, match="does not match the file name"):
            load_entry(path)

    def test_find_entry(self):
        """Test lookup by name and by path."""
        path = self.temp_dir / "mine.qid"
        path.write_text(entry_text("mine", "mine: 1 = 1"), encoding="utf-8")
        assert find_entry(path).name == "mine"
        assert find_entry("mine", directory=self.temp_dir).name == "mine"
        with pytest.raises(CatalogError, match="Unknown catalog entry"):
            find_entry("no-such-entry")

    def test_missing_directory(self):
        """Test that a missing catalog directory is reported."""
        with pytest.raises(CatalogError, match="does not exist"):
            catalog_paths(self.temp_dir / "absent")


class TestVerifyEntry:
    """Test suite for verify_entry."""

    @pytest.mark.parametrize("name", ["rr1", "rr2"])
    def test_rogers_ramanujan(self, name):
        """Test the two Rogers-Ramanujan identities."""
        report = verify_entry(find_entry(name), 60)
        assert report.passed, report.describe()
        assert report.target == name
        assert report.checked_a_order == 0

    def test_two_readings(self):
        """Test that exactly one reading of the mod 18 a-generalisation holds."""
        report = verify_entry(find_entry("a-mod18i"), 14, 3)
        assert report.passed, report.describe()
        assert report.note == "paired: pass; literal: fail"
        assert report.checked_a_order == 3

    def test_slater_91_product_side(self):
        """Test that the mod 27 entry carries the (3,4,2) product, q^21 base included."""
        entry = find_entry("slater-91")
        assert evaluate(entry.identity().rhs, 40) == product_side(FamilyIndex(3, 4, 2), 40)
        report = verify_entry(entry, 40)
        assert report.passed, report.describe()

    def test_ambiguous(self):
        """Test that two holding readings make the entry ambiguous."""
        text = entry_text(
            "dup",
            f"dup/one: {RR1_SUM} = infprod(q^2,q^3,q^5;q^5)/infprod(q;q)",
            f"dup/two: {RR1_SUM} = 1/infprod(q,q^4;q^5)",
        )
        report = verify_entry(parse_entry(text), 20)
        assert report.status == "ambiguous"
        assert report.note == "one: pass; two: pass"
        assert not report.passed

    def test_no_reading_holds(self):
        """Test that the first failing reading is located when none holds."""
        text = entry_text(
            "bad",
            f"bad/one: {RR1_SUM} = infprod(q^2,q^3,q^7;q^7)/infprod(q;q)",
            f"bad/two: {RR1_SUM} = infprod(q,q^4,q^5;q^5)/infprod(q;q)",
        )
        report = verify_entry(parse_entry(text), 20)
        assert report.status == "fail"
        assert report.first_divergence.location.startswith("one: ")

    def test_corrupted_product_side(self):
        """Test that changing one base of the mod 18 product is caught at q^18."""
        text = (CATALOG_DIR / "mod18-4.qid").read_text(encoding="utf-8")
        corrupted = text.replace("infprod(q^8,q^10,q^18;q^18)", "infprod(q^8,q^10,q^20;q^18)")
        assert corrupted != text
        report = verify_entry(parse_entry(corrupted), 24)
        assert report.status == "fail"
        divergence = report.first_divergence
        assert (divergence.a_exp, divergence.q_exp) == (0, 18)
        assert divergence.rhs_coeff - divergence.lhs_coeff == 1


@pytest.mark.parametrize("name", ALL_NAMES)
def test_render_round_trip(name):
    """Test that every catalog identity renders to text that parses back to it."""
    entry = find_entry(name)
    for _, identity in entry.readings:
        assert parse(render(identity)) == identity


@pytest.mark.parametrize("name", ALL_NAMES)
def test_catalog_entry_holds(name):
    """Test every catalog entry at a moderate order."""
    entry: CatalogEntry = find_entry(name)
    if entry.is_bivariate:
        report = verify_entry(entry, 20, 5)
    else:
        report = verify_entry(entry, 40)
    assert report.passed, report.describe()
