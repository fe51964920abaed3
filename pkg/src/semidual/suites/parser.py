"""
Parser for YAML suite files.

    suite_id: nonconstant-grade
    description: ...
    builder: nonconstant-grade      # optional, defaults to suite_id
    experimental: false             # optional
    aliases: [ex2_12]               # optional, other names accepted by --suite
    notes: [...]                    # optional, copied into the report
    expect:
      inf_n1: -2
      cohen_macaulay: true
"""

from pathlib import Path
from typing import Any

import yaml

from semidual.logging import setup_logger

from .suite import Suite

logger = setup_logger()


class SuiteParser:
    """Parses YAML suite files into Suite objects."""

    def parse_file(self, suite_path: str) -> Suite:
        logger.info(f"Parsing suite file: {suite_path}")

        path = Path(suite_path)
        if not path.exists():
            logger.error(f"Suite file not found: {suite_path}")
            raise FileNotFoundError(f"Suite file not found: {suite_path}")

        try:
            with open(path) as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            logger.error(f"Invalid YAML in suite file {suite_path}: {e}")
            raise ValueError(f"Invalid YAML in suite file {suite_path}: {e}")

        if not isinstance(data, dict):
            raise ValueError(f"Suite file {suite_path} must contain a mapping")
        return self.parse_dict(data)

    def parse_dict(self, data: dict[str, Any]) -> Suite:
        suite_id = data.get("suite_id")
        if not suite_id:
            logger.error("Suite must have a 'suite_id' field")
            raise ValueError("Suite must have a 'suite_id' field")

        if "expect" not in data:
            logger.error(f"Missing required field in suite {suite_id}: expect")
            raise ValueError("Missing required field: expect")
        expect = data["expect"]
        if not isinstance(expect, dict) or not expect:
            raise ValueError(f"Suite {suite_id}: 'expect' must be a non-empty mapping")

        notes = data.get("notes", [])
        if isinstance(notes, str):
            notes = [notes]
        aliases = data.get("aliases", [])
        if isinstance(aliases, str):
            aliases = [aliases]

        logger.debug(f"Parsed suite {suite_id} with {len(expect)} golden values")
        return Suite(
            suite_id=str(suite_id),
            description=data.get("description", ""),
            builder=str(data.get("builder", suite_id)),
            expect={str(k): v for k, v in expect.items()},
            experimental=bool(data.get("experimental", False)),
            notes=list(notes),
            aliases=[str(a) for a in aliases],
        )
