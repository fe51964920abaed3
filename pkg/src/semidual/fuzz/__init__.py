"""
Seeded property checks over random monomial quotient rings.
"""

from .enums import InstanceOutcome, PropertyTag
from .generators import Instance, InstanceSpec, PartSpec, build, gen_instance, shrink_candidates
from .properties import PROPERTIES, PropertyFailure, SkipInstance
from .runner import DEFAULT_COUNT, check_spec, generate, parse_tag, run_fuzz, shrink

__all__ = [
    "PropertyTag",
    "InstanceOutcome",
    "PartSpec",
    "InstanceSpec",
    "Instance",
    "gen_instance",
    "build",
    "shrink_candidates",
    "PROPERTIES",
    "PropertyFailure",
    "SkipInstance",
    "DEFAULT_COUNT",
    "parse_tag",
    "generate",
    "check_spec",
    "shrink",
    "run_fuzz",
]
