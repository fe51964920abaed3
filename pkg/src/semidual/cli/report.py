"""
Report records and the bounded worker pool that produces them.

Every record is a plain dict; the stream is one canonical JSON object per
line and the report file wraps the records with `schema: 1`. Records carry
no timings or addresses, so identical inputs give byte-identical output.
"""

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, TextIO, TypeVar

from semidual.logging import setup_logger
from semidual.settings import worker_count

from .enums import Outcome

logger = setup_logger()

SCHEMA_VERSION = 1

T = TypeVar("T")


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def run_ordered(tasks: list[Callable[[], T]], workers: int | None = None) -> list[T]:
    """Run independent tasks on at most `workers` threads; results keep input order."""
    workers = workers or worker_count()
    if workers <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(lambda task: task(), tasks))


def is_failure(record: dict) -> bool:
    """Failed or errored records count, except those marked experimental."""
    if record.get("experimental"):
        return False
    return record.get("status") in (Outcome.FAIL.value, Outcome.ERROR.value)


@dataclass
class Report:
    """Records in input order, optionally echoed to a stream as they arrive."""

    field: str
    seed: int
    window: int | None = None
    stream: TextIO | None = None
    records: list[dict] = field(default_factory=list)

    def add(self, record: dict) -> None:
        self.records.append(record)
        if self.stream is not None:
            self.stream.write(canonical_json(record) + "\n")
            self.stream.flush()

    def extend(self, records: list[dict]) -> None:
        for record in records:
            self.add(record)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if is_failure(r))

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "field": self.field,
            "seed": self.seed,
            "window": self.window,
            "records": list(self.records),
            "failures": self.failures,
            "passed": self.passed,
        }

    def write(self, json_path: str) -> None:
        with open(json_path, "w", encoding="utf-8") as f:
            f.write(json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False))
            f.write("\n")
        logger.info(f"Report written to {json_path}: {len(self.records)} records")
