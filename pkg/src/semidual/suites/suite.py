"""
A suite: one worked instance with golden values for every number it computes.
"""

from dataclasses import dataclass, field
from typing import Any

from semidual.extint import ExtInt
from semidual.logging import setup_logger

logger = setup_logger()


def normalize(value: Any) -> Any:
    """JSON-comparable form of an observed value."""
    if isinstance(value, ExtInt):
        return value.to_json()
    if isinstance(value, tuple):
        return [normalize(v) for v in value]
    if isinstance(value, list):
        return [normalize(v) for v in value]
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Mismatch:
    key: str
    expected: Any
    observed: Any

    def to_dict(self) -> dict:
        return {"key": self.key, "expected": self.expected, "observed": self.observed}


@dataclass
class Suite:
    """Golden values for the instance that `builder` computes."""

    suite_id: str
    description: str
    builder: str
    expect: dict[str, Any]
    experimental: bool = False
    notes: list[str] = field(default_factory=list)
    aliases: list[str] = field(default_factory=list)

    def answers_to(self, name: str) -> bool:
        return name == self.suite_id or name in self.aliases

    def compare(self, observed: dict[str, Any]) -> list[Mismatch]:
        mismatches = []
        for key, expected in self.expect.items():
            if key not in observed:
                mismatches.append(Mismatch(key, expected, None))
                continue
            value = normalize(observed[key])
            if value != expected:
                mismatches.append(Mismatch(key, expected, value))
        if mismatches:
            logger.warning(f"Suite {self.suite_id}: {len(mismatches)} value(s) differ")
        return mismatches
