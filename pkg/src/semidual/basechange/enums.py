"""
Enumerations for the basechange package.
"""

from enum import Enum


class MapKind(str, Enum):
    """The ring maps R -> S the engine handles."""

    SURJECTION = "surjection"
    MODULE_FINITE = "module-finite"


class HypothesisStatus(str, Enum):
    """Whether every maximal ideal of R is contracted from S."""

    CERTIFIED = "certified"
    UNVERIFIED = "hypothesis-unverified"
    NOT_COVERED = "m-Spec not covered"


class DescentKind(str, Enum):
    """Which functor carries C and X to S in a descent comparison."""

    TENSOR = "tensor"
    COBASE = "cobase"
