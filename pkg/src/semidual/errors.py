"""
Exception types raised by the semidual engine.

Input problems are ValueError subclasses, the way the rest of the stack reports
bad data; a failed theorem check is a RuntimeError because it means the engine
itself is wrong.
"""


class RingMismatchError(ValueError):
    """Operands live over different rings."""


class UnsupportedRingError(ValueError):
    """The requested computation is outside what the engine can certify."""


class NotAChainMapError(ValueError):
    """A map of complexes does not commute with the differentials."""


class VerificationError(ValueError):
    """A precondition (semidualizing, reflexive, finite pd) has not been established."""


class BindingError(ValueError):
    """A script statement refers to a missing or ill-typed binding."""

    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(f"{name}: {message}")


class ScriptParseError(ValueError):
    """A script or polynomial could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        self.detail = message
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class TheoremViolation(RuntimeError):
    """A certified instance contradicts a proved (in)equality."""
