"""
Enumerations for the cli package.
"""

from enum import Enum


class Keyword(str, Enum):
    """First word of a script statement."""

    RING = "ring"
    IDEAL = "ideal"
    MODULE = "module"
    COMPLEX = "complex"
    MAP = "map"
    GDIM = "gdim"
    SEMIDUAL = "semidual"
    BASECHANGE = "basechange"
    COBASE = "cobase"
    DESCENT = "descent"
    SERIES = "series"
    GRADE_PROFILE = "grade-profile"
    DEPTH = "depth"
    PD = "pd"
    BETTI = "betti"
    HOMOLOGY = "homology"
    SUITE = "suite"
    FUZZ = "fuzz"

    @property
    def binds(self) -> bool:
        return self in _BINDING_KEYWORDS


_BINDING_KEYWORDS = {
    Keyword.RING,
    Keyword.IDEAL,
    Keyword.MODULE,
    Keyword.COMPLEX,
    Keyword.MAP,
}


class Outcome(str, Enum):
    """Status of one report record."""

    OK = "ok"
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"
