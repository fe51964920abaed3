"""
Semidual Logging: Project-level logging configuration.
"""

from .config import (
    COMPONENTS,
    ColoredFormatter,
    configure_logging,
    get_logger,
    parse_level,
    set_log_level,
    setup_logger,
)

__all__ = [
    "COMPONENTS",
    "ColoredFormatter",
    "setup_logger",
    "get_logger",
    "parse_level",
    "set_log_level",
    "configure_logging",
]
