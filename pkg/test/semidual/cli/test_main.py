"""
Unit tests for the Semidual command line.
"""

import json
from pathlib import Path

import pytest
from semidual.main import main

SUITES_DIR = Path(__file__).resolve().parents[3] / "suites"


@pytest.fixture(autouse=True)
def plain_environment(monkeypatch):
    monkeypatch.delenv("SEMIDUAL_FIELD", raising=False)
    monkeypatch.setenv("SEMIDUAL_THREADS", "1")


def _exit_code(args: list[str]) -> int:
    with pytest.raises(SystemExit) as info:
        main(args)
    return info.value.code


class TestRun:
    """Tests for the run command."""

    def test_script(self, tmp_path, capsys):
        """Test that a clean script exits 0 and streams its records."""
        script = tmp_path / "plane.sd"
        script.write_text("ring R = [x, y]\nmodule k = R residue\ndepth R\ndepth k\n")
        output = tmp_path / "report.json"

        assert _exit_code(["run", str(script), "--json", str(output)]) == 0

        lines = capsys.readouterr().out.splitlines()
        records = [json.loads(line) for line in lines]
        assert [r["result"] for r in records] == [{"depth": 2}, {"depth": 0}]
        report = json.loads(output.read_text(encoding="utf-8"))
        assert report["schema"] == 1
        assert report["field"] == "32003"
        assert report["records"] == records

    def test_script_with_error(self, tmp_path, capsys):
        """Test that an error record makes the run exit 1."""
        script = tmp_path / "broken.sd"
        script.write_text("ring R = [x]\ndepth Q\n")

        assert _exit_code(["run", str(script)]) == 1

        (line,) = capsys.readouterr().out.splitlines()
        assert json.loads(line)["binding"] == "Q"

    def test_missing_script(self, tmp_path, capsys):
        """Test that a missing script is reported and fails the run."""
        assert _exit_code(["run", str(tmp_path / "missing.sd")]) == 1
        assert "Script not found" in capsys.readouterr().err

    def test_rational_field(self, tmp_path, capsys):
        """Test that --field selects the coefficient field."""
        script = tmp_path / "line.sd"
        script.write_text("ring R = [x]\ndepth R\n")

        output = tmp_path / "report.json"

        assert _exit_code(["run", str(script), "--field", "Q", "--json", str(output)]) == 0
        assert json.loads(output.read_text(encoding="utf-8"))["field"] == "Q"


class TestList:
    """Tests for the list command."""

    def test_lists_suites_and_tags(self, capsys):
        """Test that suites and property tags are printed."""
        assert _exit_code(["list", "--suites", str(SUITES_DIR)]) == 0
        out = capsys.readouterr().out
        assert "Suites:" in out
        assert "two-point-tensor (experimental)" in out
        assert "broken-sup-bound (negated)" in out
        assert "  tensor-bounds\n" in out


class TestHelp:
    """Tests for running without a command."""

    def test_help(self, capsys):
        """Test that no command prints help and exits 0."""
        assert _exit_code([]) == 0
        assert "usage:" in capsys.readouterr().out
