"""
Semidualizing verification.

Theorem-backed constructions (R itself, the cover dualizing complex, base and
cobase change of a certified complex, RHom(C', C) for C-reflexive C') are
recorded on the object with `certify` and get an unconditional `yes`.
Anything else is checked on a window: the homothety R -> H_0(RHom(C, C))
must be an isomorphism and H_n(RHom(C, C)) must vanish for every other
degree the window covers.
"""

from semidual.complexes import amp, hom_complex, is_exact, truncate_free
from semidual.derived import as_complex, module_representative
from semidual.errors import UnsupportedRingError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.memo import cached, cached_values
from semidual.modules import FreeComplex, ModuleComplex, kernel, resolve
from semidual.modules.submodule import annihilator_of_element, span_contains

from .enums import Construction, Verdict
from .verdict import SemidualVerdict

logger = setup_logger()

WINDOW_MARGIN = 4


def certify(complex_, construction: Construction):
    """Record a theorem-backed semidualizing construction on the object."""
    cached(complex_, ("certified",), lambda: construction)
    return complex_


def certification(complex_) -> Construction | None:
    found = cached_values(complex_, "certified")
    return found[0][1] if found else None


def is_shifted_ring(complex_) -> bool:
    """Σ^k R(-t) as a free complex of rank one."""
    if not isinstance(complex_, ModuleComplex) or not complex_.is_free:
        return False
    return len(complex_.modules) == 1 and sum(m.ngens for m in complex_.modules.values()) == 1


def homothety_vector(free: FreeComplex, augmentation, target: ModuleComplex) -> tuple:
    """The element of Hom(F, C)_0 given by the augmentation F -> C, block by block."""
    entries: list = []
    for i in free.indices():
        if not free.rank(i) or not target.module(i).ngens:
            continue
        component = augmentation.component(i)
        for j in range(free.rank(i)):
            entries.extend(component.columns[j])
    return tuple(entries)


def _homothety_witness(hom: ModuleComplex, vector: tuple) -> dict:
    """Empty when 1 -> vector induces R ≅ H_0(hom); otherwise what went wrong."""
    ring = hom.ring
    module = hom.module(0)
    if not module.ngens:
        return {"degree": 0, "reason": "H_0 is zero"}
    target = hom.module(-1)
    columns = list(hom.differential(0).columns)
    if target.ngens:
        cycles = kernel(ring, columns, target.relations, target.twists, module.twists)
    else:
        cycles = module.generators()
    base = [c for c in hom.differential(1).columns if any(c)] + list(module.relations)
    spanning = [vector] + base
    if not all(span_contains(ring, spanning, z, module.twists) for z in cycles):
        generators = hom.homology(0).minimal_generator_count()
        return {"degree": 0, "reason": "homothety not onto", "generators": generators}
    annihilator = annihilator_of_element(ring, vector, base, module.twists)
    if not all(ring.is_zero(f) for f in annihilator):
        return {"degree": 0, "reason": "homothety not injective"}
    return {}


def is_semidualizing(candidate, cutoff: int | None = None) -> SemidualVerdict:
    """Decide whether C is semidualizing, on a window when no theorem applies."""
    complex_ = as_complex(candidate)
    construction = certification(complex_) or certification(candidate)
    if construction is not None:
        return SemidualVerdict(Verdict.YES, construction=construction)
    if is_shifted_ring(complex_):
        return SemidualVerdict(Verdict.YES, construction=Construction.RING)
    key = ("semidual-verdict", cutoff)
    return cached(candidate, key, lambda: _window_verdict(complex_, cutoff))


def _window_verdict(complex_, cutoff: int | None) -> SemidualVerdict:
    representative = module_representative(complex_)
    if representative is None:
        raise UnsupportedRingError(
            f"{complex_.label()} has no R-module model and no theorem-backed certificate"
        )
    if is_exact(representative):
        return SemidualVerdict(Verdict.NO, witness={"reason": "C is exact"})

    ring = representative.ring
    if cutoff is None:
        cutoff = ring.nvars + int(amp(representative)) + WINDOW_MARGIN
    resolution = resolve(representative, cutoff)
    free = resolution.complex
    if not resolution.terminated:
        free = truncate_free(free, free.lo, cutoff)
    hom = hom_complex(free, representative)
    lowest = ExtInt.neg_inf() if resolution.terminated else ExtInt(representative.hi - cutoff)

    for n in reversed(hom.indices()):
        if n != 0 and lowest < n and not hom.homology(n).is_zero():
            logger.info(f"{complex_.label()} is not semidualizing: H_{n}(RHom(C, C)) != 0")
            return SemidualVerdict(Verdict.NO, cutoff, witness={"degree": n, "ext": -n})

    vector = homothety_vector(free, resolution.augmentation, representative)
    witness = _homothety_witness(hom, vector)
    if witness:
        logger.info(f"{complex_.label()} is not semidualizing: {witness['reason']}")
        return SemidualVerdict(Verdict.NO, cutoff, witness=witness)
    exact = {"exact": True} if resolution.terminated else {}
    return SemidualVerdict(Verdict.YES_WINDOW, cutoff, witness=exact)
