"""
Runs suites and turns each into one report record.

    {"suite": ..., "status": "pass"|"fail"|"error", "experimental": bool,
     "observed": {...}, "mismatches": [...], "notes": [...]}
"""

from semidual.cli.enums import Outcome
from semidual.cli.report import run_ordered
from semidual.errors import TheoremViolation
from semidual.logging import setup_logger
from semidual.ring import make_field

from .catalog import get_builder
from .suite import Suite, normalize

logger = setup_logger()


def run_suite(suite: Suite, field_spec=None) -> dict:
    """Build the instance, compare against the golden values, never raise."""
    record = {
        "suite": suite.suite_id,
        "experimental": suite.experimental,
        "notes": list(suite.notes),
    }
    try:
        observed = get_builder(suite.builder)(make_field(field_spec))
    except TheoremViolation as error:
        logger.error(f"Suite {suite.suite_id}: {error}")
        return {**record, "status": Outcome.FAIL.value, "error": str(error)}
    except (ValueError, ArithmeticError) as error:
        logger.error(f"Suite {suite.suite_id} could not be built: {error}")
        return {**record, "status": Outcome.ERROR.value, "error": str(error)}

    mismatches = suite.compare(observed)
    status = Outcome.FAIL if mismatches else Outcome.PASS
    if mismatches and suite.experimental:
        logger.info(f"Experimental suite {suite.suite_id} differs; not gating")
    logger.info(f"Suite {suite.suite_id}: {status.value}")
    return {
        **record,
        "status": status.value,
        "observed": normalize(observed),
        "mismatches": [m.to_dict() for m in mismatches],
    }


def run_suites(suites: list[Suite], field_spec=None, workers: int | None = None) -> list[dict]:
    tasks = [lambda suite=suite: run_suite(suite, field_spec) for suite in suites]
    return run_ordered(tasks, workers)
