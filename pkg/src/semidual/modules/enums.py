"""
Enumerations for the modules package.
"""

from enum import Enum


class PdCertificate(str, Enum):
    """How a projective dimension was established."""

    TERMINATED = "terminated"
    INFINITE = "infinite"
