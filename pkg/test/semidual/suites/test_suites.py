"""
Unit tests for the Semidual Suites package.
"""

from pathlib import Path

import pytest
from semidual.errors import TheoremViolation
from semidual.extint import ExtInt
from semidual.ring import make_field
from semidual.suites import (
    BUILDERS,
    Mismatch,
    Suite,
    SuiteManager,
    SuiteParser,
    SuiteValidator,
    get_builder,
    normalize,
    run_suite,
    run_suites,
)

PROJECT_SUITES = Path(__file__).resolve().parents[3] / "suites"

SUITE_YAML = """
suite_id: {name}
description: A test suite
experimental: {experimental}
notes: single note
expect:
  depth: 2
  amp: inf
"""


def _write_suite(directory: Path, name: str, experimental: bool = False) -> Path:
    path = directory / f"{name}.yaml"
    path.write_text(SUITE_YAML.format(name=name, experimental=str(experimental).lower()))
    return path


def _suite(builder: str = "fake", experimental: bool = False) -> Suite:
    return Suite("fake-suite", "", builder, {"depth": 2, "amp": "inf"}, experimental)


class TestSuiteParser:
    """Tests for SuiteParser."""

    def test_parse_dict(self):
        """Test the defaults of a minimal suite."""
        suite = SuiteParser().parse_dict({"suite_id": "x", "expect": {"a": 1}})
        assert suite.builder == "x"
        assert not suite.experimental
        assert suite.notes == []

    def test_aliases(self):
        """Test that a single alias is promoted to a list."""
        suite = SuiteParser().parse_dict({"suite_id": "x", "aliases": "y", "expect": {"a": 1}})
        assert suite.aliases == ["y"]
        assert suite.answers_to("x")
        assert suite.answers_to("y")
        assert not suite.answers_to("z")

    def test_parse_file(self, tmp_path):
        """Test reading a YAML suite, with a single note promoted to a list."""
        suite = SuiteParser().parse_file(str(_write_suite(tmp_path, "demo", True)))
        assert suite.suite_id == "demo"
        assert suite.experimental
        assert suite.notes == ["single note"]
        assert suite.expect == {"depth": 2, "amp": "inf"}

    def test_missing_id(self):
        """Test that a suite needs an id."""
        with pytest.raises(ValueError, match="suite_id"):
            SuiteParser().parse_dict({"expect": {"a": 1}})

    def test_missing_expect(self):
        """Test that a suite needs golden values."""
        with pytest.raises(ValueError, match="Missing required field: expect"):
            SuiteParser().parse_dict({"suite_id": "x"})
        with pytest.raises(ValueError, match="non-empty mapping"):
            SuiteParser().parse_dict({"suite_id": "x", "expect": {}})

    def test_invalid_yaml(self, tmp_path):
        """Test that broken YAML is reported."""
        path = tmp_path / "broken.yaml"
        path.write_text("suite_id: [unclosed\n")
        with pytest.raises(ValueError, match="Invalid YAML"):
            SuiteParser().parse_file(str(path))

    def test_missing_file(self, tmp_path):
        """Test that a missing file is reported."""
        with pytest.raises(FileNotFoundError, match="Suite file not found"):
            SuiteParser().parse_file(str(tmp_path / "none.yaml"))


class TestSuite:
    """Tests for Suite comparison."""

    def test_normalize(self):
        """Test that extended integers and tuples become JSON values."""
        observed = {"inf": ExtInt.pos_inf(), "pair": (ExtInt(1), 2)}
        assert normalize(observed) == {"inf": "inf", "pair": [1, 2]}

    def test_compare(self):
        """Test missing and differing values."""
        mismatches = _suite().compare({"depth": ExtInt(3)})
        assert mismatches == [Mismatch("depth", 2, 3), Mismatch("amp", "inf", None)]

    def test_compare_equal(self):
        """Test that normalized equal values match."""
        assert _suite().compare({"depth": ExtInt(2), "amp": ExtInt.pos_inf()}) == []


class TestSuiteManager:
    """Tests for SuiteManager."""

    def test_load(self, tmp_path):
        """Test loading one suite, all suites and an unknown name."""
        _write_suite(tmp_path, "beta")
        _write_suite(tmp_path, "alpha")
        manager = SuiteManager(tmp_path)
        assert manager.names() == ["alpha", "beta"]
        assert [s.suite_id for s in manager.load("beta")] == ["beta"]
        assert len(manager.load("all")) == 2
        with pytest.raises(ValueError, match="Unknown suite 'gamma'"):
            manager.load("gamma")

    def test_load_by_alias(self, tmp_path):
        """Test that a suite also answers to its aliases."""
        path = _write_suite(tmp_path, "beta")
        path.write_text(path.read_text() + "aliases: [ex1_1, first]\n")
        manager = SuiteManager(tmp_path)
        assert [s.suite_id for s in manager.load("ex1_1")] == ["beta"]
        assert [s.suite_id for s in manager.load("first")] == ["beta"]
        assert manager.names() == ["beta"]

    def test_project_aliases(self):
        """Test the short names of the shipped suites."""
        manager = SuiteManager(PROJECT_SUITES)
        short_names = {
            "ex2_5": "reflexive-negative-gdim",
            "ex2_12": "nonconstant-grade",
            "ex3_7": "two-point-tensor",
            "ex3_10": "product-of-fields",
            "ex4_6": "tensor-amplitude",
            "ex4_13": "non-flat-uniqueness",
            "ex5_12": "strict-inequalities",
            "ex5_15": "uncovered-max-spec",
        }
        for alias, suite_id in short_names.items():
            assert [s.suite_id for s in manager.load(alias)] == [suite_id]

    def test_missing_directory(self, tmp_path):
        """Test that the suites directory must exist."""
        with pytest.raises(FileNotFoundError, match="Suites directory not found"):
            SuiteManager(tmp_path / "absent")

    def test_project_suites_have_builders(self):
        """Test that every shipped suite names a registered builder."""
        suites = SuiteManager(PROJECT_SUITES).load_all()
        assert sorted(s.builder for s in suites) == sorted(BUILDERS)


class TestSuiteValidator:
    """Tests for SuiteValidator."""

    def test_project_suites(self):
        """Test that the shipped suite files validate."""
        validator = SuiteValidator()
        assert validator.validate_directory(str(PROJECT_SUITES))
        assert validator.errors == []

    def test_unknown_builder(self, tmp_path):
        """Test that a suite without a builder is an error."""
        validator = SuiteValidator()
        assert not validator.validate_suite_file(str(_write_suite(tmp_path, "orphan")))
        assert "No builder registered" in validator.errors[0]

    def test_float_values(self, tmp_path):
        """Test that floats are rejected in golden values."""
        path = tmp_path / "product-of-fields.yaml"
        path.write_text("suite_id: product-of-fields\nexpect:\n  amp: .inf\n")
        validator = SuiteValidator()
        validator.validate_suite_file(str(path))
        assert "is a float" in validator.errors[0]

    def test_file_name_warning(self, tmp_path):
        """Test that a file named unlike its suite_id gives a warning."""
        path = tmp_path / "renamed.yaml"
        path.write_text("suite_id: product-of-fields\nexpect:\n  amp: 1\n")
        validator = SuiteValidator()
        assert validator.validate_suite_file(str(path))
        assert "differs from suite_id" in validator.warnings[0]

    def test_duplicate_alias(self, tmp_path, monkeypatch):
        """Test that two suites cannot share a name."""
        monkeypatch.setattr("semidual.suites.validator.BUILDERS", {"alpha": None, "beta": None})
        for name in ("alpha", "beta"):
            path = _write_suite(tmp_path, name)
            path.write_text(path.read_text() + "aliases: [shared]\n")
        validator = SuiteValidator()
        assert not validator.validate_directory(str(tmp_path))
        assert validator.errors == ["beta.yaml: name 'shared' is already used by alpha.yaml"]

    def test_empty_directory(self, tmp_path):
        """Test that a directory without suites is an error."""
        validator = SuiteValidator()
        assert not validator.validate_directory(str(tmp_path))
        assert "No suite files" in validator.errors[0]


class TestRunSuite:
    """Tests for running suites."""

    def test_unknown_builder(self):
        """Test that the builder registry rejects unknown names."""
        with pytest.raises(ValueError, match="Unknown suite builder"):
            get_builder("nope")

    def test_pass(self, monkeypatch):
        """Test a suite whose builder reproduces every golden value."""
        monkeypatch.setattr(
            "semidual.suites.runner.get_builder",
            lambda name: lambda field: {"depth": ExtInt(2), "amp": ExtInt.pos_inf()},
        )
        record = run_suite(_suite())
        assert record["status"] == "pass"
        assert record["observed"] == {"depth": 2, "amp": "inf"}
        assert record["mismatches"] == []

    def test_fail(self, monkeypatch):
        """Test that a differing value fails with its mismatch."""
        monkeypatch.setattr(
            "semidual.suites.runner.get_builder",
            lambda name: lambda field: {"depth": 1, "amp": "inf"},
        )
        record = run_suite(_suite(experimental=True))
        assert record["status"] == "fail"
        assert record["experimental"]
        assert record["mismatches"] == [{"key": "depth", "expected": 2, "observed": 1}]

    def test_errors_are_records(self, monkeypatch):
        """Test that builder errors and theorem violations never raise."""

        def broken(field):
            raise ArithmeticError("division by zero")

        def violated(field):
            raise TheoremViolation("bound exceeded")

        monkeypatch.setattr("semidual.suites.runner.get_builder", lambda name: broken)
        assert run_suite(_suite())["status"] == "error"
        monkeypatch.setattr("semidual.suites.runner.get_builder", lambda name: violated)
        assert run_suite(_suite())["status"] == "fail"

    def test_order(self, monkeypatch):
        """Test that records follow the suite order with several workers."""
        monkeypatch.setattr(
            "semidual.suites.runner.get_builder", lambda name: lambda field: {"depth": 2}
        )
        suites = [Suite(f"s{i}", "", "fake", {"depth": 2}) for i in range(5)]
        records = run_suites(suites, workers=3)
        assert [r["suite"] for r in records] == ["s0", "s1", "s2", "s3", "s4"]


class TestCatalog:
    """Tests for individual suite builders."""

    def test_product_of_fields(self):
        """Test that the amplitude-one complex over k × k is recorded as dualizing."""
        observed = normalize(get_builder("product-of-fields")(make_field(32003)))
        assert observed["verdict"] == "yes-window"
        assert observed["dualizing"]
        assert (observed["amp"], observed["amp_p0"], observed["amp_p1"]) == (1, 0, 0)
