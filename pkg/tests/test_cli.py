"""Tests for the command line"""

import csv
import io
import json
import math
import os
import sys

import pytest
import structlog

from src.cli import main as cli
from src.cli.commands import evaluate
from src.models.sweep import CompareRow
from src.utils.errors import OracleConvergenceError
from src.utils.logging import configure_logging


def run(capsys, *argv):
    code = cli.main(list(argv) + ["--log-level", "ERROR"])
    return code, capsys.readouterr().out


class TestTurningPoints:
    """Test the turning-points command"""

    def test_output(self, capsys):
        """Test a, b, ab and the default delta"""
        code, out = run(capsys, "turning-points", "--c", "0.25")
        data = json.loads(out)
        assert code == 0
        assert data["a"] == pytest.approx(1 / 3)
        assert data["b"] == pytest.approx(3.0)
        assert data["ab"] == pytest.approx(1.0)
        assert data["delta"] == pytest.approx(0.1)

    def test_bad_c(self, capsys):
        """Test that c outside (0, 1) exits 2"""
        code, _ = run(capsys, "turning-points", "--c", "1.5")
        assert code == 2


class TestEval:
    """Test the eval command"""

    def test_exact(self, capsys):
        """Test m_2(3; 1, 1/2) = -4"""
        code, out = run(capsys, "eval", "--mode", "exact", "--n", "2", "--c", "0.5", "--beta", "1", "--z", "3,0")
        data = json.loads(out)
        assert code == 0
        assert data["meixner"]["log_mag"] == pytest.approx(math.log(4))
        assert abs(data["meixner"]["phase"]) == pytest.approx(math.pi)

    def test_exact_decimal(self, capsys):
        """Test that an exactly representable oracle value prints without rounding noise"""
        code, out = run(capsys, "eval", "--mode", "exact", "--n", "2", "--c", "0.5", "--beta", "1", "--z", "3,0")
        data = json.loads(out)
        assert code == 0
        assert data["meixner"]["value"] == "-4.0"

    def test_both(self, capsys):
        """Test the asymptotic value at z = 7 within 5% of the oracle"""
        code, out = run(capsys, "eval", "--mode", "both", "--n", "100", "--c", "0.5", "--beta", "1", "--z", "7,0")
        data = json.loads(out)
        assert code == 0
        assert data["formula"] == "exterior"
        assert data["rel_err"] < 0.05

    def test_singular(self, capsys):
        """Test that a singular point exits 3"""
        code, _ = run(capsys, "eval", "--mode", "asym", "--n", "10", "--c", "0.5", "--beta", "1", "--z", "0,0")
        assert code == 3

    def test_invalid_params(self, capsys):
        """Test that out-of-range parameters exit 2"""
        code, _ = run(capsys, "eval", "--n", "10", "--c", "1.5", "--beta", "1", "--z", "7,0")
        assert code == 2

    def test_usage_error(self, capsys):
        """Test that a missing flag exits 2"""
        assert cli.main(["eval", "--n", "10"]) == 2

    def test_oracle_failure(self, capsys, monkeypatch):
        """Test that oracle non-convergence exits 4"""
        def fail(self, params, z):
            raise OracleConvergenceError("no agreement", 16384, 1e-3)

        monkeypatch.setattr(evaluate.OracleService, "meixner", fail)
        code, _ = run(capsys, "eval", "--mode", "exact", "--n", "2", "--c", "0.5", "--beta", "1", "--z", "3,0")
        assert code == 4


class TestCompare:
    """Test the compare command"""

    def test_columns_and_rows(self, capsys):
        """Test the header and the decreasing error at z = 7"""
        code, out = run(capsys, "compare", "--n-list", "32,64,128", "--c", "0.5", "--beta", "1.5", "--z", "7,0")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == list(CompareRow.model_fields)
        errors = [float(r[-1]) for r in rows[1:]]
        assert len(errors) == 3
        assert errors[0] > errors[1] > errors[2]

    def test_formula_flips_at_boundary(self, capsys):
        """Test formula_used across Re z = 1"""
        code, out = run(capsys, "compare", "--n", "50", "--c", "0.5", "--beta", "1.5",
                        "--grid", "0.9,1.1,0,0,0.1")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [r["formula_used"] for r in rows] == ["interior", "interior", "exterior"]

    def test_empty_grid(self, capsys):
        """Test that an empty grid prints only the header"""
        code, out = run(capsys, "compare", "--n", "50", "--c", "0.5", "--beta", "1.5",
                        "--grid", "1,0,0,0,0.5")
        assert code == 0
        assert out.strip().splitlines() == [",".join(CompareRow.model_fields)]

    def test_jsonl_and_file(self, capsys, tmp_path):
        """Test JSON-lines output written to a file with a fit summary"""
        target = tmp_path / "rows.jsonl"
        summary = tmp_path / "summary.json"
        code, out = run(capsys, "compare", "--n-list", "32,64", "--c", "0.5", "--beta", "1.5", "--z", "7,0",
                        "--format", "jsonl", "--out", str(target), "--fit", "--summary", str(summary))
        assert code == 0
        assert out == ""
        lines = target.read_text().splitlines()
        assert [json.loads(line)["n"] for line in lines] == [32, 64]
        fits = json.loads(summary.read_text())["fits"]
        assert len(fits) == 1
        assert not [f for f in os.listdir(tmp_path) if f.endswith(".part")]

    def test_deterministic(self, capsys):
        """Test identical flags give identical bytes"""
        argv = ("compare", "--n", "40", "--c", "0.5", "--beta", "1.5", "--grid", "2,3,-0.5,0.5,0.5")
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second

    def test_bad_n_list(self, capsys):
        """Test that a decreasing n list exits 2"""
        code, _ = run(capsys, "compare", "--n-list", "64,32", "--c", "0.5", "--beta", "1.5", "--z", "7,0")
        assert code == 2


class TestRegions:
    """Test the regions command"""

    def test_counts(self, capsys):
        """Test region tags on a small grid with constant a, b columns"""
        code, out = run(capsys, "regions", "--c", "0.5", "--delta", "0.1", "--grid=-1,2,-0.3,0.3,0.25")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        kinds = {r["region"] for r in rows}
        assert kinds <= {"inside", "outside", "boundary"}
        assert "inside" in kinds and "outside" in kinds
        assert len({r["a"] for r in rows}) == 1
        assert len({r["b"] for r in rows}) == 1

    def test_default_grid(self, capsys):
        """Test the default [-1, 2] x [-3 delta, 3 delta] grid"""
        code, out = run(capsys, "regions", "--c", "0.5")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert len(rows) == 10000
        assert len({r["re_z"] for r in rows}) == 100
        assert len({r["im_z"] for r in rows}) == 100
        ims = [float(r["im_z"]) for r in rows]
        assert max(ims) == pytest.approx(-min(ims))

    def test_unknown_format(self, capsys):
        """Test that --format only takes the supported output formats"""
        assert cli.main(["regions", "--c", "0.5", "--format", "xml"]) == 2
        code, out = run(capsys, "regions", "--c", "0.5", "--format", "jsonl", "--grid=0,1,0,0,0.5")
        assert code == 0
        assert [json.loads(line)["re_z"] for line in out.splitlines()] == [0.0, 0.5, 1.0]


class TestVerify:
    """Test the verify command"""

    def test_factors_suite(self, capsys):
        """Test a passing suite exits 0 with a JSON report"""
        code, out = run(capsys, "verify", "--suite", "factors")
        report = json.loads(out)
        assert code == 0
        assert report["passed"]
        assert all("residual" in c for c in report["checks"])

    def test_unknown_suite(self, capsys):
        """Test that an unknown suite is a usage error"""
        assert cli.main(["verify", "--suite", "nonsense"]) == 2


class TestLogging:
    """Test the structlog setup used by the command line"""

    def test_follows_replaced_stderr(self, capsys, monkeypatch):
        """Test that log lines go to the stderr current at write time"""
        configure_logging("INFO", "json")
        structlog.get_logger().info("first_line")
        assert "first_line" in capsys.readouterr().err

        replacement = io.StringIO()
        monkeypatch.setattr(sys, "stderr", replacement)
        structlog.get_logger().info("second_line")
        assert json.loads(replacement.getvalue())["event"] == "second_line"

    def test_after_cli_run(self, capsys):
        """Test that logging still works once a command has configured it"""
        run(capsys, "turning-points", "--c", "0.25")
        structlog.get_logger().error("after_run")
        assert "after_run" in capsys.readouterr().err
