"""
Logging configuration for the semidual engine.

Every module calls `setup_logger()` at import time and gets a logger named
after itself (semidual.ring.groebner, semidual.cli.session, ...). Records go
to stderr; stdout is reserved for the JSON Lines report stream.

    SEMIDUAL_LOG_LEVEL   DEBUG, INFO, WARNING (default), ERROR or CRITICAL
    NO_COLOR             any value disables ANSI colors
"""

import inspect
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# .env lives in the project root, next to src/
project_root = Path(__file__).parent.parent.parent.parent
load_dotenv(project_root / ".env")

DEFAULT_LEVEL = logging.WARNING
LOG_FORMAT = "%(levelname)s [%(name)s] %(message)s"

COMPONENTS = (
    "ring",
    "modules",
    "complexes",
    "derived",
    "duality",
    "basechange",
    "suites",
    "fuzz",
    "cli",
)


class ColoredFormatter(logging.Formatter):
    """Level names in color; the record itself is left untouched for other handlers."""

    COLORS = {
        "DEBUG": "\033[36m",  # Cyan
        "INFO": "\033[32m",  # Green
        "WARNING": "\033[33m",  # Yellow
        "ERROR": "\033[31m",  # Red
        "CRITICAL": "\033[35m",  # Magenta
    }
    RESET = "\033[0m"
    BOLD = "\033[1m"

    def format(self, record):
        color = self.COLORS.get(record.levelname)
        if color is None:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{color}{self.BOLD}{original:8s}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def parse_level(value: str | int | None) -> int:
    """
    Resolve a level name or number.

    Unknown names fall back to WARNING so a typo in the environment never
    silences errors.
    """
    if value is None:
        return DEFAULT_LEVEL
    if isinstance(value, int):
        return value
    text = value.strip().upper()
    if text.isdigit():
        return int(text)
    return logging.getLevelNamesMapping().get(text, DEFAULT_LEVEL)


def _get_log_level() -> int:
    return parse_level(os.getenv("SEMIDUAL_LOG_LEVEL"))


def _use_color(stream) -> bool:
    if os.getenv("NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _caller_name(frame) -> str:
    caller = frame.f_back if frame is not None else None
    if caller is None:
        return "semidual"
    name = caller.f_globals.get("__name__", "")
    if name and name != "__main__":
        return name
    filename = caller.f_globals.get("__file__", "")
    if filename:
        return f"semidual.{Path(filename).stem}"
    return "semidual"


def setup_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Set up a logger writing to stderr.

    Args:
        name: Logger name (e.g., 'semidual.ring.groebner').
              If None, the calling module's name is used.

    Returns:
        Configured logger
    """
    if name is None:
        frame = inspect.currentframe()
        try:
            name = _caller_name(frame)
        finally:
            del frame

    logger = logging.getLogger(name)

    if not logger.handlers:
        level = _get_log_level()
        logger.setLevel(level)

        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        formatter_class = ColoredFormatter if _use_color(sys.stderr) else logging.Formatter
        handler.setFormatter(formatter_class(fmt=LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get or create a logger for the given name."""
    return logging.getLogger(name)


def set_log_level(level: int | str, component: str | None = None):
    """
    Set the log level for semidual loggers.

    Args:
        level: Logging level, as a number or a name such as "DEBUG"
        component: Optional package to filter on (one of COMPONENTS).
                   If None, every 'semidual.*' logger is set.
    """
    if component is not None and component not in COMPONENTS:
        raise ValueError(f"Unknown logging component {component!r}")
    level = parse_level(level)
    prefix = f"semidual.{component}" if component else "semidual"

    for name in list(logging.Logger.manager.loggerDict.keys()):
        if name == prefix or name.startswith(prefix + "."):
            logger = logging.getLogger(name)
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)


def configure_logging(level: int | str | None = None, component: Optional[str] = None):
    """
    Configure logging for the semidual engine.

    If level is not provided, SEMIDUAL_LOG_LEVEL is used.

    Examples:
        # Everything at DEBUG
        configure_logging("DEBUG")

        # Only the Groebner kernel and ideal arithmetic at DEBUG
        configure_logging(logging.DEBUG, component="ring")
    """
    if level is None:
        level = _get_log_level()
    set_log_level(level, component=component)


# Default logger for the semidual package
_logger = setup_logger("semidual")
