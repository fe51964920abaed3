"""
Semidual: exact homological algebra over quotients of polynomial rings.

Semidualizing complexes, G-dimensions and their behavior under base change,
computed with Groebner bases and minimal free resolutions over a finite
field or the rationals.
"""

# Logging configuration - available at project level
from .logging import (
    configure_logging,
    get_logger,
    set_log_level,
    setup_logger,
)

__all__ = [
    "setup_logger",
    "get_logger",
    "set_log_level",
    "configure_logging",
]
