"""
Tests for the qrrt command line.
"""

import shutil
import tempfile
from pathlib import Path

from src.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from src.verification.report import load_reports

BAD_ENTRY = (
    "# name: bad\n# label: wrong modulus\n# variables:\n"
    "bad: sum(n>=0, q^(n^2)/poch(q;q;n)) = infprod(q^2,q^3,q^7;q^7)/infprod(q;q)\n"
)


class TestCommands:
    """Test suite for the subcommands."""

    def setup_method(self):
        """Setup test fixtures."""
        self.temp_dir = Path(tempfile.mkdtemp())

    def teardown_method(self):
        """Cleanup test fixtures."""
        if self.temp_dir.exists():
            shutil.rmtree(self.temp_dir)

    def test_expand(self, capsys):
        """Test printing the coefficients of an expression."""
        assert run(["expand", "poch(q;q;3)", "--order", "10"]) == EXIT_OK
        assert capsys.readouterr().out == "1 -1q -1q^2 +1q^4 +1q^5 -1q^6\n"

    def test_expand_bad_expression(self, capsys):
        """Test that a malformed expression is a usage error."""
        assert run(["expand", "poch(q;q", "--order", "5"]) == EXIT_USAGE
        assert "qrrt expand: error:" in capsys.readouterr().err

    def test_verify(self, capsys):
        """Test verifying a catalog entry by name."""
        assert run(["verify", "rr1", "--order", "30", "-q"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("✓ rr1: pass (q^30,")

    def test_verify_unknown(self, capsys):
        """Test an unknown entry name."""
        assert run(["verify", "no-such-entry"]) == EXIT_USAGE
        assert "Unknown catalog entry" in capsys.readouterr().err

    def test_verify_failing_file(self, capsys):
        """Test that a false identity exits with 1."""
        path = self.temp_dir / "bad.qid"
        path.write_text(BAD_ENTRY, encoding="utf-8")
        assert run(["verify", str(path), "--order", "10"]) == EXIT_FAILED
        assert "✗ bad: fail" in capsys.readouterr().out

    def test_catalog_json(self, capsys):
        """Test the JSON document written by the catalog command."""
        output = self.temp_dir / "out" / "reports.json"
        code = run(["catalog", "rr1", "rr2", "--order", "20", "--jobs", "1", "--json", str(output)])
        assert code == EXIT_OK
        assert "2/2 entries pass" in capsys.readouterr().out
        reports = load_reports(output.read_text(encoding="utf-8"))
        assert [r.target for r in reports] == ["rr1", "rr2"]
        assert all(r.checked_q_order == 20 for r in reports)

    def test_catalog_needs_selection(self, capsys):
        """Test that catalog needs --all or names."""
        assert run(["catalog"]) == EXIT_USAGE
        assert run(["catalog", "--all", "rr1"]) == EXIT_USAGE

    def test_bailey(self, capsys):
        """Test the Bailey pair check with one corollary."""
        argv = ["bailey", "--d", "1", "--k", "2", "--nmax", "3", "--order", "12", "--a-order", "4", "--insert", "WBL"]
        assert run(argv) == EXIT_OK
        out = capsys.readouterr().out
        assert "bailey(1,2)" in out
        assert len(out.strip().splitlines()) == 2

    def test_bailey_unsupported(self, capsys):
        """Test a (d, k) pair without a closed form."""
        assert run(["bailey", "--d", "5", "--k", "5", "--nmax", "2"]) == EXIT_USAGE
        assert "is not one of" in capsys.readouterr().err

    def test_qdiff(self, capsys):
        """Test the q-difference checks of a family without a closed form."""
        assert run(["qdiff", "--d", "1", "--k", "2", "--order", "12", "--a-order", "4"]) == EXIT_OK
        assert "Q-system(1,2)" in capsys.readouterr().out

    def test_partitions(self, capsys):
        """Test the per-n table."""
        assert run(["partitions", "--d", "2", "--k", "3", "--i", "3", "--nmax", "4"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "n=4: A=5 B=5 ok" in out
        assert "gordon(2,3,3)" in out

    def test_partitions_cap(self, capsys):
        """Test that exceeding the enumeration cap is a usage error."""
        assert run(["partitions", "--d", "1", "--k", "2", "--i", "1", "--nmax", "500"]) == EXIT_USAGE
        assert "MAX_PARTITION_N" in capsys.readouterr().err

    def test_list(self, capsys):
        """Test the catalog listing."""
        assert run(["list"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 42
        assert any(line.startswith("rr1 ") and "Rogers-Ramanujan" in line for line in lines)


class TestArguments:
    """Test suite for argument handling."""

    def test_no_subcommand(self, capsys):
        """Test that a subcommand is required."""
        assert run([]) == EXIT_USAGE

    def test_negative_order(self, capsys):
        """Test the order type check."""
        assert run(["expand", "q", "--order", "-1"]) == EXIT_USAGE
        assert "expected a value >= 0" in capsys.readouterr().err

    def test_help(self, capsys):
        """Test that --help exits cleanly."""
        assert run(["--help"]) == EXIT_OK
        assert "catalog" in capsys.readouterr().out
