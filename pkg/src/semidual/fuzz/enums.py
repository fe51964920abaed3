"""
Enumerations for the fuzz package.
"""

from enum import Enum


class PropertyTag(str, Enum):
    """Registered properties the fuzzer can check."""

    TENSOR_BOUNDS = "tensor-bounds"
    GDIM_SUP_BOUND = "gdim-sup-bound"
    GDIM_PD = "gdim-pd"
    AUSLANDER_BASS = "auslander-bass"
    SERIES_IDENTITY = "series-identity"
    SERIES_TRANSFER = "series-transfer"
    STANDARD_MORPHISMS = "standard-morphisms"
    CONE_TENSOR = "cone-tensor"
    SEMIDUALIZING_PAIRS = "semidualizing-pairs"
    BROKEN_SUP_BOUND = "broken-sup-bound"

    @property
    def negated(self) -> bool:
        """A mutated statement: the run passes when a counterexample is found."""
        return self == PropertyTag.BROKEN_SUP_BOUND


class InstanceOutcome(str, Enum):
    """What happened to one generated instance."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
