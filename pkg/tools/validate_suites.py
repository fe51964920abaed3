#!/usr/bin/env python3
"""
Suite Validation Tool

Validates suite files in the suites/ directory: YAML syntax, the suite
schema, golden value types and the builder registry.

Usage:
    python tools/validate_suites.py [suites_directory] [--file SUITE]

If no suites directory is specified, defaults to 'suites/' in the project root.

Exit codes:
    0: Validation passed
    1: Validation failed
"""

import argparse
import sys
from pathlib import Path

from semidual.suites import SuiteValidator


def main():
    parser = argparse.ArgumentParser(
        description="Validate semidual suite files",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    %(prog)s                                   # Validate suites in default location (suites/)
    %(prog)s suites/                           # Validate all suites in a directory
    %(prog)s --file suites/tensor-amplitude.yaml
""",
    )

    parser.add_argument(
        "suites_dir",
        nargs="?",
        default=None,
        help="Directory containing suite files (default: suites/)",
    )
    parser.add_argument("--file", default=None, help="Validate a single suite file")

    args = parser.parse_args()

    validator = SuiteValidator()
    if args.file:
        print(f"Validating suite: {args.file}")
        print("=" * 60)
        success = validator.validate_suite_file(args.file)
        validator.print_summary()
        sys.exit(0 if success and not validator.errors else 1)

    # Determine suites directory
    if args.suites_dir:
        suites_dir = Path(args.suites_dir)
    else:
        # Find project root (look for pyproject.toml)
        current = Path.cwd()
        while current != current.parent:
            if (current / "pyproject.toml").exists():
                break
            current = current.parent
        suites_dir = current / "suites"

    if not suites_dir.exists():
        print(f"Error: Suites directory not found: {suites_dir}")
        sys.exit(1)

    print(f"Validating suites in: {suites_dir}")
    print("=" * 60)

    success = validator.validate_directory(str(suites_dir))
    validator.print_summary()

    sys.exit(0 if success and not validator.errors else 1)


if __name__ == "__main__":
    main()
