"""
Enumerations for the derived package.
"""

from enum import Enum


class WindowKind(str, Enum):
    """Why a derived-functor result can be trusted where it claims to be."""

    FINITE_PD = "finite-pd"
    AB_WINDOW = "ab-window"
    USER = "user"
