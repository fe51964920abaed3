"""
Homological invariants of bounded complexes: inf, sup and amplitude, both
globally and after localization at declared primes.

Localizations are never built. H_i(X)_p is nonzero exactly when the
annihilator of H_i(X) lies in p, and that is an ideal-membership question.
"""

from concurrent.futures import ThreadPoolExecutor

from semidual.extint import ExtInt, ext_max, ext_min
from semidual.logging import setup_logger
from semidual.modules import FPModule, HomologicalObject
from semidual.ring import Localization, PrimeIdeal

logger = setup_logger()


def homology(complex_: HomologicalObject, n: int) -> FPModule:
    """H_n of a complex, presented on chosen cycle generators."""
    return complex_.homology(n)


def nonzero_degrees(complex_: HomologicalObject, workers: int = 1) -> list[int]:
    """Indices n with H_n(X) != 0."""
    indices = list(complex_.indices())
    if workers > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(lambda n: not complex_.homology(n).is_zero(), indices))
    else:
        flags = [not complex_.homology(n).is_zero() for n in indices]
    return [n for n, flag in zip(indices, flags) if flag]


def inf_sup_amp(complex_: HomologicalObject) -> tuple[ExtInt, ExtInt, ExtInt]:
    """(inf, sup, amp); the zero complex gives (+∞, -∞, -∞)."""
    degrees = nonzero_degrees(complex_)
    if not degrees:
        return ExtInt.pos_inf(), ExtInt.neg_inf(), ExtInt.neg_inf()
    lo, hi = min(degrees), max(degrees)
    return ExtInt(lo), ExtInt(hi), ExtInt(hi - lo)


def inf(complex_: HomologicalObject) -> ExtInt:
    return inf_sup_amp(complex_)[0]


def sup(complex_: HomologicalObject) -> ExtInt:
    return inf_sup_amp(complex_)[1]


def amp(complex_: HomologicalObject) -> ExtInt:
    return inf_sup_amp(complex_)[2]


def is_exact(complex_: HomologicalObject) -> bool:
    return not nonzero_degrees(complex_)


def _supported(module: FPModule, where: PrimeIdeal | Localization) -> bool:
    if module.is_zero():
        return False
    annihilator = module.annihilator()
    if isinstance(where, Localization):
        return where.supports(annihilator)
    return where.contains(annihilator)


def localized_degrees(complex_: HomologicalObject, where: PrimeIdeal | Localization) -> list[int]:
    """Indices n with H_n(X)_p != 0."""
    ring = where.ring
    if ring != complex_.ring:
        logger.error(f"Prime {_label(where)} belongs to another ring")
        raise ValueError(f"Prime {_label(where)} does not belong to {complex_.ring.describe()}")
    return [n for n in complex_.indices() if _supported(complex_.homology(n), where)]


def _label(where) -> str:
    if isinstance(where, Localization):
        return "{" + ", ".join(where.labels()) + "}"
    return where.label


def localized_inf(complex_: HomologicalObject, where: PrimeIdeal | Localization) -> ExtInt:
    """inf(X_p) = min{i : Ann H_i(X) ⊆ p}."""
    return ext_min(localized_degrees(complex_, where))


def localized_sup(complex_: HomologicalObject, where: PrimeIdeal | Localization) -> ExtInt:
    return ext_max(localized_degrees(complex_, where))


def localized_amp(complex_: HomologicalObject, where: PrimeIdeal | Localization) -> ExtInt:
    degrees = localized_degrees(complex_, where)
    if not degrees:
        return ExtInt.neg_inf()
    return ExtInt(max(degrees) - min(degrees))


def homology_summary(complex_: HomologicalObject) -> dict:
    """Degrees and minimal generator counts of the nonzero homology, for reports."""
    summary = {}
    for n in complex_.indices():
        module = complex_.homology(n)
        if not module.is_zero():
            summary[str(n)] = {
                "generators": module.minimal_generator_count(),
                "annihilator": module.annihilator().basis_text(),
            }
    return summary
