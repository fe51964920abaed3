"""
Enumerations for the duality package.
"""

from enum import Enum


class Verdict(str, Enum):
    """Outcome of a semidualizing check."""

    YES = "yes"
    NO = "no"
    YES_WINDOW = "yes-window"


class Construction(str, Enum):
    """Theorem-backed ways a complex is known to be semidualizing."""

    RING = "ring"
    COVER_DUALIZING = "cover-dualizing"
    BASE_CHANGE = "base-change"
    COBASE_CHANGE = "cobase-change"
    REFLEXIVE_DUAL = "reflexive-dual"


class GDimCertificate(str, Enum):
    """How a G_C-dimension value was established."""

    EXACT = "exact"
    AB_CERTIFIED_INFINITE = "ab-certified-infinite"
    WINDOW = "window"
