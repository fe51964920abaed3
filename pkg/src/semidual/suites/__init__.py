"""
Worked-example suites: YAML golden values checked against the engine.
"""

from .catalog import BUILDERS, get_builder
from .manager import ALL_SUITES, SuiteManager
from .parser import SuiteParser
from .runner import run_suite, run_suites
from .suite import Mismatch, Suite, normalize
from .validator import SuiteValidator

__all__ = [
    "Suite",
    "Mismatch",
    "normalize",
    "SuiteParser",
    "SuiteManager",
    "SuiteValidator",
    "ALL_SUITES",
    "BUILDERS",
    "get_builder",
    "run_suite",
    "run_suites",
]
