"""
Runtime settings read from the environment (and a project-level .env).

    SEMIDUAL_THREADS   size of the worker pool for suites and fuzz runs
    SEMIDUAL_FIELD     default coefficient field: an odd prime or Q
    SEMIDUAL_SUITES    directory holding the suite YAML files
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from semidual.logging import setup_logger

logger = setup_logger()

project_root = Path(__file__).parent.parent.parent
load_dotenv(project_root / ".env")

DEFAULT_THREADS = 4


def worker_count() -> int:
    """Bounded pool size; invalid or non-positive values fall back to the default."""
    text = os.getenv("SEMIDUAL_THREADS", "")
    if not text:
        return DEFAULT_THREADS
    try:
        value = int(text)
    except ValueError:
        logger.warning(f"Ignoring SEMIDUAL_THREADS={text!r}: not an integer")
        return DEFAULT_THREADS
    if value < 1:
        logger.warning(f"Ignoring SEMIDUAL_THREADS={value}: must be positive")
        return DEFAULT_THREADS
    return value


def default_field() -> str | None:
    return os.getenv("SEMIDUAL_FIELD") or None


def suites_dir() -> Path:
    configured = os.getenv("SEMIDUAL_SUITES")
    return Path(configured) if configured else project_root / "suites"
