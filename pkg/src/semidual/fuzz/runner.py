"""
Seeded property checks with shrinking.

Instance i of a run with seed s is generated from random.Random(f"{s}/{tag}/{i}"),
so a run is reproducible and independent of the worker count. The first
failing instance (in index order) is shrunk by dropping generators for as
long as the smaller instance still fails.
"""

import random
from dataclasses import dataclass

from semidual.cli.enums import Outcome
from semidual.cli.report import run_ordered
from semidual.errors import TheoremViolation, UnsupportedRingError, VerificationError
from semidual.logging import setup_logger
from semidual.ring import make_field

from .enums import InstanceOutcome, PropertyTag
from .generators import InstanceSpec, build, gen_instance, shrink_candidates
from .properties import NEEDS_NONZERODIVISOR, PROPERTIES, PropertyFailure, SkipInstance

logger = setup_logger()

DEFAULT_COUNT = 100
MAX_SHRINK_STEPS = 50

_UNDECIDED = (SkipInstance, UnsupportedRingError, VerificationError)

TAG_ALIASES = {
    "thm4_2c": PropertyTag.TENSOR_BOUNDS,
    "lem2_2": PropertyTag.GDIM_SUP_BOUND,
    "prop3_8": PropertyTag.GDIM_PD,
}


def parse_tag(text: str) -> PropertyTag:
    if text in TAG_ALIASES:
        return TAG_ALIASES[text]
    try:
        return PropertyTag(text)
    except ValueError:
        known = ", ".join(t.value for t in PropertyTag)
        logger.error(f"Unknown property tag {text!r}")
        raise ValueError(f"Unknown property tag {text!r} (known: {known})")


@dataclass(frozen=True)
class Trial:
    index: int
    spec: InstanceSpec
    outcome: InstanceOutcome
    message: str = ""


def check_spec(tag: PropertyTag, spec: InstanceSpec, field) -> tuple[InstanceOutcome, str]:
    """Run one property on one instance; engine limits count as skipped."""
    try:
        PROPERTIES[tag](build(spec, field))
    except (PropertyFailure, TheoremViolation) as error:
        return InstanceOutcome.FAILED, str(error)
    except _UNDECIDED as error:
        return InstanceOutcome.SKIPPED, str(error)
    return InstanceOutcome.PASSED, ""


def generate(tag: PropertyTag, seed: int, index: int) -> InstanceSpec:
    rng = random.Random(f"{seed}/{tag.value}/{index}")
    return gen_instance(rng, nzd=tag in NEEDS_NONZERODIVISOR)


def shrink(tag: PropertyTag, spec: InstanceSpec, message: str, field) -> tuple[InstanceSpec, str]:
    """Greedy: take the first smaller instance that still fails, until none does."""
    for _ in range(MAX_SHRINK_STEPS):
        for candidate in shrink_candidates(spec):
            outcome, detail = check_spec(tag, candidate, field)
            if outcome == InstanceOutcome.FAILED:
                spec, message = candidate, detail
                break
        else:
            break
    return spec, message


def run_fuzz(
    tag: PropertyTag | str,
    count: int = DEFAULT_COUNT,
    seed: int = 0,
    field_spec=None,
    workers: int | None = None,
) -> dict:
    """One report record for `count` instances of the tagged property."""
    tag = parse_tag(tag) if isinstance(tag, str) else tag
    if count < 0:
        raise ValueError(f"Instance count must be non-negative, got {count}")
    field = make_field(field_spec)

    def trial(index: int) -> Trial:
        spec = generate(tag, seed, index)
        outcome, message = check_spec(tag, spec, field)
        return Trial(index, spec, outcome, message)

    trials = run_ordered([lambda i=i: trial(i) for i in range(count)], workers)
    tally = {o: sum(1 for t in trials if t.outcome == o) for o in InstanceOutcome}
    failing = next((t for t in trials if t.outcome == InstanceOutcome.FAILED), None)

    record = {
        "fuzz": tag.value,
        "count": count,
        "seed": seed,
        "passed": tally[InstanceOutcome.PASSED],
        "failed": tally[InstanceOutcome.FAILED],
        "skipped": tally[InstanceOutcome.SKIPPED],
        "negated": tag.negated,
        "counterexample": None,
    }
    if failing is not None:
        spec, message = shrink(tag, failing.spec, failing.message, field)
        record["counterexample"] = {
            "index": failing.index,
            "instance": spec.describe(),
            "message": message,
        }
        logger.info(f"Fuzz {tag.value}: counterexample {spec.describe()}")

    found = failing is not None
    status = Outcome.PASS if found == tag.negated else Outcome.FAIL
    record["status"] = status.value
    logger.info(
        f"Fuzz {tag.value}: {record['passed']} passed, {record['failed']} failed, "
        f"{record['skipped']} skipped ({status.value})"
    )
    return record
