"""
Semidual CLI: run session scripts, worked-example suites and property fuzzing.

Records stream to stdout as JSON Lines in input order; logs go to stderr.
The exit code is 0 iff no gating record failed or errored.
"""

import argparse
import sys
from typing import Optional

from semidual.cli import Report
from semidual.cli.session import Session
from semidual.fuzz import DEFAULT_COUNT, PropertyTag
from semidual.logging import configure_logging
from semidual.settings import default_field
from semidual.suites import SuiteManager


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--field", "-f", default=None, help="Coefficient field: an odd prime or Q (default 32003)"
    )
    parser.add_argument(
        "--suites", default=None, help="Directory containing suite files (default ./suites)"
    )
    parser.add_argument(
        "--log-level", default=None, help="Log level on stderr (default: SEMIDUAL_LOG_LEVEL)"
    )


def main(args: Optional[list[str]] = None):
    """Main entry point for the semidual CLI."""
    parser = argparse.ArgumentParser(
        description="Semidual: semidualizing complexes and G-dimensions over quotient rings."
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # 'run' command
    run_parser = subparsers.add_parser("run", help="Run scripts, suites and fuzz checks")
    run_parser.add_argument("scripts", nargs="*", help="Session scripts, run in order")
    run_parser.add_argument(
        "--suite", "-s", action="append", default=[], help="Suite to run (repeatable, or 'all')"
    )
    run_parser.add_argument(
        "--fuzz", action="append", default=[], help="Property tag to fuzz (repeatable)"
    )
    run_parser.add_argument(
        "--count", type=int, default=DEFAULT_COUNT, help="Instances per fuzz tag (default 100)"
    )
    run_parser.add_argument("--seed", type=int, default=0, help="Fuzz seed (default 0)")
    run_parser.add_argument(
        "--window", "-w", type=int, default=None, help="Ext cutoff for window verdicts"
    )
    run_parser.add_argument("--json", "-o", default=None, help="Write the full report here")
    _add_common_options(run_parser)

    # 'list' command
    list_parser = subparsers.add_parser("list", help="List suites and property tags")
    _add_common_options(list_parser)

    parsed_args = parser.parse_args(args)
    if getattr(parsed_args, "log_level", None):
        configure_logging(parsed_args.log_level)

    if parsed_args.command == "run":
        try:
            session = Session(
                field_spec=parsed_args.field or default_field(),
                window=parsed_args.window,
                seed=parsed_args.seed,
                suites_dir=parsed_args.suites,
            )
            report = Report(
                session.field_name, parsed_args.seed, parsed_args.window, stream=sys.stdout
            )
            for script in parsed_args.scripts:
                session.run_script(script, report)
            for name in parsed_args.suite:
                report.extend(session.suite_records(name))
            for tag in parsed_args.fuzz:
                report.add(session.fuzz_record(tag, parsed_args.count))
            if parsed_args.json:
                report.write(parsed_args.json)

            print(
                f"\n{len(report.records)} records, {report.failures} failures",
                file=sys.stderr,
            )
            sys.exit(0 if report.passed else 1)

        except Exception as e:
            print(f"Error: {e}", file=sys.stderr)
            sys.exit(1)
    elif parsed_args.command == "list":
        try:
            session = Session(field_spec=parsed_args.field, suites_dir=parsed_args.suites)
            manager = SuiteManager(session.suites_dir)
        except Exception as e:
            print(f"Error: {e}", file=sys.stderr)
            sys.exit(1)
        print("Suites:")
        for suite in manager.load_all():
            marker = " (experimental)" if suite.experimental else ""
            print(f"  {suite.suite_id}{marker}")
        print("\nProperty tags:")
        for tag in PropertyTag:
            marker = " (negated)" if tag.negated else ""
            print(f"  {tag.value}{marker}")
        sys.exit(0)
    else:
        parser.print_help()
        sys.exit(0)


if __name__ == "__main__":
    main()
