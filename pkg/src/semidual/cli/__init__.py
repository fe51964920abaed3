"""
Script parsing and report plumbing for the command line.

The Session lives in semidual.cli.session and is imported from there; the
suite and fuzz runners import this package for the report helpers.
"""

from .enums import Keyword, Outcome
from .report import SCHEMA_VERSION, Report, canonical_json, is_failure, run_ordered
from .script import ScriptParser, Statement, Token, tokenize

__all__ = [
    "Keyword",
    "Outcome",
    "SCHEMA_VERSION",
    "Report",
    "canonical_json",
    "is_failure",
    "run_ordered",
    "ScriptParser",
    "Statement",
    "Token",
    "tokenize",
]
