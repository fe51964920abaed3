"""
Locating and loading suite files.

    suites/
    └── *.yaml      one file per suite, named after its suite_id
"""

from pathlib import Path

from semidual.logging import setup_logger

from .parser import SuiteParser
from .suite import Suite

logger = setup_logger()

ALL_SUITES = "all"


class SuiteManager:
    """Loads the suite files of one directory."""

    def __init__(self, suites_dir: str | Path):
        self.suites_dir = Path(suites_dir)
        if not self.suites_dir.exists():
            raise FileNotFoundError(f"Suites directory not found: {suites_dir}")
        self.parser = SuiteParser()
        logger.debug(f"SuiteManager initialized: suites_dir={self.suites_dir}")

    def get_suite_files(self) -> list[Path]:
        yaml_files = list(self.suites_dir.glob("*.yaml")) + list(self.suites_dir.glob("*.yml"))
        return sorted(yaml_files)

    def load_all(self) -> list[Suite]:
        return [self.parser.parse_file(str(path)) for path in self.get_suite_files()]

    def names(self) -> list[str]:
        return [suite.suite_id for suite in self.load_all()]

    def load(self, name: str) -> list[Suite]:
        """The suite named by its id or an alias, or every suite for `all`."""
        suites = self.load_all()
        if name == ALL_SUITES:
            return suites
        for suite in suites:
            if suite.answers_to(name):
                return [suite]
        logger.error(f"Unknown suite {name!r}")
        known = ", ".join([s.suite_id for s in suites] + [ALL_SUITES])
        raise ValueError(f"Unknown suite {name!r} (known: {known})")
