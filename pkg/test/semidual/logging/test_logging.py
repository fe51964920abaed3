"""
Unit tests for the Semidual Logging package.
"""

import logging

import pytest
from semidual.logging import (
    ColoredFormatter,
    configure_logging,
    parse_level,
    set_log_level,
    setup_logger,
)


@pytest.fixture
def restore_levels():
    """Put every semidual logger back at its level after the test."""
    names = [n for n in logging.Logger.manager.loggerDict if n.startswith("semidual")]
    saved = {name: logging.getLogger(name).level for name in names}
    yield
    for name, level in saved.items():
        logging.getLogger(name).setLevel(level)
        for handler in logging.getLogger(name).handlers:
            handler.setLevel(level)


class TestParseLevel:
    """Tests for parse_level."""

    def test_names(self):
        """Test level names in any case."""
        assert parse_level("debug") == logging.DEBUG
        assert parse_level(" Error ") == logging.ERROR

    def test_numbers(self):
        """Test numeric levels as ints and strings."""
        assert parse_level(logging.INFO) == logging.INFO
        assert parse_level("15") == 15

    def test_fallback(self):
        """Test that unknown or missing names give WARNING."""
        assert parse_level("loud") == logging.WARNING
        assert parse_level(None) == logging.WARNING


class TestSetupLogger:
    """Tests for setup_logger."""

    def test_caller_name(self):
        """Test that the logger is named after the calling module."""
        assert setup_logger().name == __name__

    def test_single_handler(self):
        """Test that repeated setup does not stack handlers."""
        first = setup_logger("semidual.test.handlers")
        second = setup_logger("semidual.test.handlers")
        assert first is second
        assert len(second.handlers) == 1
        assert not second.propagate

    def test_environment_level(self, monkeypatch):
        """Test that SEMIDUAL_LOG_LEVEL sets the initial level."""
        monkeypatch.setenv("SEMIDUAL_LOG_LEVEL", "DEBUG")
        logger = setup_logger("semidual.test.environment")
        assert logger.level == logging.DEBUG


class TestSetLogLevel:
    """Tests for set_log_level and configure_logging."""

    def test_component(self, restore_levels):
        """Test that a component filter leaves other packages alone."""
        ring_logger = setup_logger("semidual.ring.levels")
        cli_logger = setup_logger("semidual.cli.levels")
        cli_level = cli_logger.level
        set_log_level("DEBUG", component="ring")
        assert ring_logger.level == logging.DEBUG
        assert cli_logger.level == cli_level

    def test_prefix_is_a_package(self, restore_levels):
        """Test that 'ring' does not match a sibling named 'ringside'."""
        sibling = setup_logger("semidual.ringside")
        level = sibling.level
        set_log_level(logging.DEBUG, component="ring")
        assert sibling.level == level

    def test_unknown_component(self):
        """Test that a misspelled component is rejected."""
        with pytest.raises(ValueError, match="Unknown logging component"):
            set_log_level(logging.INFO, component="rings")

    def test_configure_all(self, restore_levels):
        """Test that configure_logging reaches handlers too."""
        logger = setup_logger("semidual.duality.configure")
        configure_logging("ERROR")
        assert logger.level == logging.ERROR
        assert all(h.level == logging.ERROR for h in logger.handlers)


class TestColoredFormatter:
    """Tests for ColoredFormatter."""

    def test_colors_level_name(self):
        """Test that the level name is colored and the record is restored."""
        record = logging.LogRecord("semidual", logging.ERROR, __file__, 1, "boom", None, None)
        text = ColoredFormatter(fmt="%(levelname)s %(message)s").format(record)
        assert text.startswith("\033[31m")
        assert text.endswith("boom")
        assert record.levelname == "ERROR"
