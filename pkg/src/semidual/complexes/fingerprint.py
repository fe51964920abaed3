"""
Homology fingerprints: a deterministic summary of H(X) used as a necessary
condition for X ≃ Y.

For each degree with nonzero homology the fingerprint records the
annihilator (reduced Groebner basis), its Krull dimension and, for graded
homology over a graded-local ring, the number of minimal generators together
with a window of the Hilbert function starting at the lowest generator degree.
"""

from dataclasses import dataclass, replace

from semidual.logging import setup_logger
from semidual.modules import FPModule, HomologicalObject
from semidual.ring import Ideal, Localization, PrimeIdeal

logger = setup_logger()

HILBERT_WINDOW = 6


@dataclass(frozen=True)
class FingerprintEntry:
    """What the fingerprint keeps about one homology module."""

    index: int
    annihilator: str
    dimension: int
    generators: int | None = None
    hilbert_start: int | None = None
    hilbert: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        data = {
            "index": self.index,
            "annihilator": self.annihilator,
            "dimension": self.dimension,
        }
        if self.generators is not None:
            data["generators"] = self.generators
            data["hilbert_start"] = self.hilbert_start
            data["hilbert"] = list(self.hilbert or ())
        return data


@dataclass(frozen=True)
class HomologyFingerprint:
    """Entries for the nonzero homology modules, in ascending degree."""

    entries: tuple[FingerprintEntry, ...]

    def degrees(self) -> list[int]:
        return [e.index for e in self.entries]

    def shifted(self, k: int) -> "HomologyFingerprint":
        """Fingerprint of Σ^k X."""
        return HomologyFingerprint(tuple(replace(e, index=e.index + k) for e in self.entries))

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries]}


def module_entry(module: FPModule, index: int, window: int = HILBERT_WINDOW) -> FingerprintEntry:
    annihilator = module.annihilator()
    entry = FingerprintEntry(index, annihilator.basis_text(), annihilator.krull_dim())
    if not (module.ring.graded_local and module.is_graded):
        return entry
    minimal = module.minimized()
    start = min(minimal.twists)
    hilbert = tuple(minimal.hilbert_window(start, start + window - 1))
    return FingerprintEntry(
        index,
        entry.annihilator,
        entry.dimension,
        minimal.ngens,
        start,
        hilbert,
    )


def fingerprint(complex_: HomologicalObject, window: int = HILBERT_WINDOW) -> HomologyFingerprint:
    """Deterministic fingerprint of H(X)."""
    entries = []
    for n in complex_.indices():
        module = complex_.homology(n)
        if module.is_zero():
            continue
        entries.append(module_entry(module, n, window))
    logger.debug(f"Fingerprint of {complex_.label()}: degrees {[e.index for e in entries]}")
    return HomologyFingerprint(tuple(entries))


def fingerprints_agree(left: HomologicalObject, right: HomologicalObject) -> bool:
    return fingerprint(left) == fingerprint(right)


def _locally_equal(first: Ideal, second: Ideal, where) -> bool:
    """I_p = J_p, decided by (I : J) and (J : I) not lying in p."""
    for colon in (first.colon(second), second.colon(first)):
        if colon.is_unit:
            continue
        if isinstance(where, Localization):
            if where.supports(colon):
                return False
        elif where.contains(colon):
            return False
    return True


def localized_agree(
    left: HomologicalObject, right: HomologicalObject, where: PrimeIdeal | Localization
) -> bool:
    """
    Localized fingerprint comparison: in every degree the two homology
    modules have the same support at p and locally equal annihilators.
    """
    lo = min(left.lo, right.lo)
    hi = max(left.hi, right.hi)
    for n in range(lo, hi + 1):
        first, second = left.homology(n), right.homology(n)
        first_ann = first.annihilator()
        second_ann = second.annihilator()
        if not _locally_equal(first_ann, second_ann, where):
            logger.debug(f"Localized annihilators differ in degree {n}")
            return False
    return True
