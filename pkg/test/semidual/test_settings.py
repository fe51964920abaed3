"""
Unit tests for the Semidual settings.
"""

from pathlib import Path

from semidual.settings import (
    DEFAULT_THREADS,
    default_field,
    project_root,
    suites_dir,
    worker_count,
)


class TestWorkerCount:
    """Tests for worker_count."""

    def test_default(self, monkeypatch):
        """Test the default pool size."""
        monkeypatch.delenv("SEMIDUAL_THREADS", raising=False)
        assert worker_count() == DEFAULT_THREADS

    def test_configured(self, monkeypatch):
        """Test a valid SEMIDUAL_THREADS."""
        monkeypatch.setenv("SEMIDUAL_THREADS", "2")
        assert worker_count() == 2

    def test_invalid_values_fall_back(self, monkeypatch):
        """Test that non-integers and non-positive values are ignored."""
        for text in ("many", "0", "-3"):
            monkeypatch.setenv("SEMIDUAL_THREADS", text)
            assert worker_count() == DEFAULT_THREADS


class TestPaths:
    """Tests for field and suite directory settings."""

    def test_default_field(self, monkeypatch):
        """Test that an unset or empty field means the default."""
        monkeypatch.setenv("SEMIDUAL_FIELD", "")
        assert default_field() is None
        monkeypatch.setenv("SEMIDUAL_FIELD", "Q")
        assert default_field() == "Q"

    def test_suites_dir(self, monkeypatch, tmp_path):
        """Test the project default and an override."""
        monkeypatch.delenv("SEMIDUAL_SUITES", raising=False)
        assert suites_dir() == project_root / "suites"
        monkeypatch.setenv("SEMIDUAL_SUITES", str(tmp_path))
        assert suites_dir() == Path(tmp_path)
