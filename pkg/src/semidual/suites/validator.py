"""
Suite file validation.

Checks that every suite file is well-formed YAML, carries a suite_id and a
non-empty expect mapping, names a registered builder, and that ids and
aliases are unique.
"""

from pathlib import Path
from typing import Any

import yaml

from semidual.logging import setup_logger

from .catalog import BUILDERS
from .parser import SuiteParser

logger = setup_logger()


class SuiteValidator:
    """Validates suite files against the schema and the builder registry."""

    def __init__(self):
        self.parser = SuiteParser()
        self.errors: list[str] = []
        self.warnings: list[str] = []
        self.claimed: dict[str, str] = {}

    def validate_suite_file(self, suite_path: str) -> bool:
        path = Path(suite_path)
        if not path.exists():
            self.errors.append(f"Suite file not found: {suite_path}")
            return False

        print(f"\nValidating: {path.name}")

        try:
            with open(path) as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            self.errors.append(f"{path.name}: Invalid YAML syntax: {e}")
            return False

        if not isinstance(data, dict):
            self.errors.append(f"{path.name}: Top level must be a mapping")
            return False

        suite_id = data.get("suite_id")
        if not suite_id:
            self.errors.append(f"{path.name}: Missing required field: 'suite_id'")
            return False

        try:
            suite = self.parser.parse_dict(data)
        except ValueError as e:
            self.errors.append(f"{path.name}: Failed to parse suite: {e}")
            return False

        if suite.builder not in BUILDERS:
            self.errors.append(f"{path.name}: No builder registered for '{suite.builder}'")
            return False

        if path.stem != suite.suite_id:
            self.warnings.append(f"{path.name}: File name differs from suite_id '{suite_id}'")
        self._validate_expect(path.name, suite.expect)
        self._claim_names(path.name, [suite.suite_id, *suite.aliases])

        print(f"  ✓ Suite ID: {suite.suite_id}")
        print(f"  ✓ Builder: {suite.builder}")
        print(f"  ✓ Golden values: {len(suite.expect)}")
        if suite.experimental:
            print("  ✓ Experimental (non-gating)")
        return True

    def _claim_names(self, suite_name: str, names: list[str]) -> None:
        """Suite ids and aliases are unique across a directory."""
        for name in names:
            owner = self.claimed.setdefault(name, suite_name)
            if owner != suite_name:
                self.errors.append(f"{suite_name}: name '{name}' is already used by {owner}")

    def _validate_expect(self, suite_name: str, expect: dict[str, Any]) -> None:
        """Golden values are booleans, integers, strings or lists of these."""
        for key, value in expect.items():
            values = value if isinstance(value, list) else [value]
            for item in values:
                if isinstance(item, float):
                    hint = " (write infinities as the strings inf and -inf)"
                    self.errors.append(f"{suite_name}: '{key}' is a float{hint}")
                elif not isinstance(item, (bool, int, str)):
                    self.errors.append(
                        f"{suite_name}: '{key}' has an unsupported value {item!r}"
                    )

    def validate_directory(self, suites_dir: str) -> bool:
        suites_path = Path(suites_dir)
        if not suites_path.exists():
            self.errors.append(f"Suites directory not found: {suites_dir}")
            return False

        yaml_files = list(suites_path.rglob("*.yaml")) + list(suites_path.rglob("*.yml"))
        if not yaml_files:
            self.errors.append(f"No suite files found in {suites_dir}")
            return False

        print(f"Found {len(yaml_files)} suite file(s) to validate")

        all_valid = True
        for suite_file in sorted(yaml_files):
            if not self.validate_suite_file(str(suite_file)):
                all_valid = False
        return all_valid and not self.errors

    def print_summary(self) -> None:
        print("\n" + "=" * 60)
        if self.errors:
            print(f"❌ Validation failed with {len(self.errors)} error(s):")
            for error in self.errors:
                print(f"  • {error}")
        else:
            print("✓ Validation passed!")

        if self.warnings:
            print(f"\n⚠️  {len(self.warnings)} warning(s):")
            for warning in self.warnings:
                print(f"  • {warning}")

        print("=" * 60)
