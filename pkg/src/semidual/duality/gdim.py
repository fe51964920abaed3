"""
G_C-dimension, total C-reflexivity and the duality RHom(-, C).

gdim_C(X) = inf(C) - inf(RHom(X, C)) when X is C-reflexive and ∞ otherwise.
Two situations are exact: C a cover dualizing complex (every homologically
finite X is reflexive) and X with a finite free replacement. For a
semidualizing module C and X of infinite projective dimension the value is
decided on the Auslander-Bass window: a nonzero Ext^i(X, C) above
depth R - depth X certifies ∞, and otherwise a high syzygy of X is tested
for total C-reflexivity.
"""

from dataclasses import dataclass, field

from semidual.complexes import (
    fingerprint,
    fingerprints_agree,
    inf,
    inf_sup_amp,
    is_exact,
    localized_inf,
    nonzero_degrees,
)
from semidual.derived import (
    CoverDual,
    as_complex,
    default_cutoff,
    depth,
    derived_tensor,
    finite_free_replacement,
    module_representative,
    rhom,
)
from semidual.errors import TheoremViolation, UnsupportedRingError, VerificationError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.modules import FPModule, ModuleComplex, kernel, resolve
from semidual.modules.module import _block_relations
from semidual.modules.resolution import is_graded_complex
from semidual.modules.submodule import span_contains

from .enums import Construction, GDimCertificate
from .semidualizing import WINDOW_MARGIN, certify, is_semidualizing
from .verdict import GDimReport

logger = setup_logger()


def _require_semidualizing(semidualizing) -> None:
    verdict = is_semidualizing(semidualizing)
    if not verdict.accepted:
        label = as_complex(semidualizing).label()
        logger.error(f"{label} is not semidualizing: {verdict.witness}")
        raise VerificationError(f"{label} is not verified semidualizing ({verdict})")


def _is_graded(complex_) -> bool:
    representative = module_representative(complex_)
    if representative is None:
        representative = complex_.over_cover()
    return is_graded_complex(representative)


def _ab_check(complex_, value: ExtInt) -> dict | None:
    """depth R - depth X against a finite value, for graded X over a graded-local ring."""
    ring = complex_.ring
    if not value.is_finite or not ring.graded_local or not _is_graded(complex_):
        return None
    depth_ring, depth_source = depth(ring), depth(complex_)
    check = {"depthR": depth_ring.to_json(), "depthX": depth_source.to_json()}
    if depth_ring - depth_source != value:
        logger.error(f"Auslander-Bass formula fails for {complex_.label()}: {check}, gdim {value}")
        raise TheoremViolation(
            f"gdim {value} of {complex_.label()} differs from depth R - depth X ({check})"
        )
    return check


def _bounds_check(semidualizing, complex_, value: ExtInt) -> None:
    """sup(X) - amp(C) ≤ gdim_C(X) on finite values."""
    if not value.is_finite:
        return
    _, c_sup, c_amp = inf_sup_amp(semidualizing)
    _, x_sup, _ = inf_sup_amp(complex_)
    if not x_sup.is_finite or not c_sup.is_finite:
        return
    if x_sup - c_amp > value:
        logger.error(f"sup - amp bound fails for {complex_.label()}: gdim {value}")
        raise TheoremViolation(
            f"sup({complex_.label()}) - amp(C) = {x_sup - c_amp} exceeds gdim {value}"
        )


def gdim(semidualizing, source, cutoff: int | None = None) -> GDimReport:
    """G_C-dim(X) with the certificate that decides it."""
    _require_semidualizing(semidualizing)
    c_complex, x_complex = as_complex(semidualizing), as_complex(source)

    if is_exact(x_complex):
        return GDimReport(ExtInt.neg_inf(), GDimCertificate.EXACT)

    if isinstance(c_complex, CoverDual) or finite_free_replacement(x_complex) is not None:
        result = rhom(x_complex, c_complex)
        lowest = inf(result)
        value = inf(c_complex) - lowest
        report = GDimReport(
            value,
            GDimCertificate.EXACT,
            rhom_homology=fingerprint(result).to_dict(),
            ab_check=_ab_check(x_complex, value),
            rhom_inf=lowest,
        )
        _bounds_check(c_complex, x_complex, value)
        logger.info(f"gdim_{c_complex.label()}({x_complex.label()}) = {value} (exact)")
        return report
    return _window_gdim(c_complex, x_complex, cutoff)


def _unwrap_module(c_complex) -> FPModule:
    representative = module_representative(c_complex)
    if representative is None:
        raise UnsupportedRingError(f"{c_complex.label()} has no R-module model")
    degrees = nonzero_degrees(representative)
    if len(degrees) != 1:
        raise UnsupportedRingError(
            f"G_C-dimension over the complex {c_complex.label()} needs X of finite "
            "projective dimension"
        )
    return representative.homology(degrees[0]).pruned()


def _syzygy(complex_: ModuleComplex, n: int) -> FPModule:
    """Coker(∂_{n+1}) of a free resolution of X."""
    resolution = resolve(complex_, n + 1)
    free = resolution.complex
    relations = list(free.differential(n + 1).columns) if free.rank(n + 1) else []
    return FPModule(free.ring, free.twists(n), tuple(relations), f"Coker ∂_{n + 1}")


def _window_gdim(c_complex, x_complex, cutoff: int | None) -> GDimReport:
    ring = x_complex.ring
    if not ring.graded_local:
        raise UnsupportedRingError("unsupported: use localized invariants")
    module = _unwrap_module(c_complex)
    representative = module_representative(x_complex)
    if representative is None:
        raise UnsupportedRingError(f"{x_complex.label()} has no R-module model")
    target = ModuleComplex.concentrated(module)
    if cutoff is None:
        cutoff, _ = default_cutoff(representative, target)
    result = rhom(representative, target, cutoff)
    summary = fingerprint(result).to_dict()
    depth_ring, depth_source = depth(ring), depth(representative)
    bound = depth_ring - depth_source
    window = result.certificate.cutoff

    high = [-n for n in result.indices() if bound < -n and not result.homology(n).is_zero()]
    if high:
        witness = min(high)
        logger.info(
            f"gdim_{c_complex.label()}({x_complex.label()}) = ∞: Ext^{witness} != 0 above "
            f"depth R - depth X = {bound}"
        )
        return GDimReport(
            ExtInt.pos_inf(),
            GDimCertificate.AB_CERTIFIED_INFINITE,
            window,
            summary,
            {"depthR": depth_ring.to_json(), "depthX": depth_source.to_json()},
            witness,
        )

    _, x_sup, _ = inf_sup_amp(representative)
    level = max(int(bound), int(x_sup))
    syzygy = _syzygy(representative, level)
    if not is_totally_reflexive(syzygy, module, WINDOW_MARGIN + ring.nvars):
        logger.info(f"Syzygy {level} of {x_complex.label()} is not totally reflexive")
        return GDimReport(ExtInt.pos_inf(), GDimCertificate.WINDOW, window, summary)

    lowest = inf(result)
    value = -lowest
    report = GDimReport(
        value,
        GDimCertificate.WINDOW,
        window,
        summary,
        _ab_check(x_complex, value),
        rhom_inf=lowest,
    )
    _bounds_check(target, representative, value)
    logger.info(f"gdim_{c_complex.label()}({x_complex.label()}) = {value} on window {window}")
    return report


def localized_gdim(semidualizing, source, where) -> ExtInt:
    """inf(C_p) - inf(RHom(X, C)_p) for a C-reflexive X with an exact RHom."""
    c_complex = as_complex(semidualizing)
    result = rhom(source, c_complex)
    if not result.is_exact:
        raise UnsupportedRingError(f"{result.label()} is only known on a window")
    return localized_inf(c_complex, where) - localized_inf(result, where)


def _module_of(semidualizing) -> FPModule:
    if isinstance(semidualizing, FPModule):
        return semidualizing
    complex_ = as_complex(semidualizing)
    _, _, spread = inf_sup_amp(complex_)
    if spread.is_finite and spread.value != 0:
        logger.error(f"Total reflexivity against {complex_.label()} with amp {spread}")
        raise ValueError(f"amp({complex_.label()}) = {spread}; C must be a module")
    return _unwrap_module(complex_)


def _ext_vanishes(source: FPModule, target: FPModule, top: int) -> bool:
    result = rhom(source, target, top + 1)
    return all(result.homology(-i).is_zero() for i in range(1, top + 1))


def _evaluation_bijective(source: FPModule, target: FPModule) -> bool:
    """M -> Hom(Hom(M, C), C), m -> (φ -> φ(m)) is an isomorphism."""
    ring = source.ring
    dual = source.hom(target)
    double = dual.module.hom(target)
    images = dual.evaluation_images()
    relations = _block_relations(ring, target.relations, dual.module.ngens, target.ngens)
    spanning = images + relations
    for generator in double.generators:
        if not span_contains(ring, spanning, generator, double.ambient_twists):
            return False
    if not dual.module.ngens:
        return source.is_zero()
    found = kernel(ring, images, relations, double.ambient_twists)
    return all(source.is_zero_element(vector) for vector in found)


def is_totally_reflexive(source: FPModule, semidualizing, cutoff: int | None = None) -> bool:
    """
    Ext^i(M, C) = 0 = Ext^i(Hom(M, C), C) for 1 ≤ i ≤ N and the biduality
    map M -> Hom(Hom(M, C), C) is bijective.
    """
    module = _module_of(semidualizing)
    top = cutoff if cutoff is not None else module.ring.nvars + WINDOW_MARGIN
    if source.is_zero():
        return True
    if not _ext_vanishes(source, module, top):
        logger.debug(f"Ext(M, C) does not vanish for {source.label()}")
        return False
    dual = source.hom(module).module
    if not _ext_vanishes(dual, module, top):
        logger.debug(f"Ext(Hom(M, C), C) does not vanish for {source.label()}")
        return False
    if not _evaluation_bijective(source, module):
        logger.debug(f"Biduality map of {source.label()} is not bijective")
        return False
    return True


def _concentrated(result):
    """An exact candidate for RHom(C', C), which a windowed result gives only in one degree."""
    if result.is_exact:
        return result
    degrees = nonzero_degrees(result)
    if len(degrees) != 1:
        raise UnsupportedRingError(f"{result.label()} is only known on a window")
    n = degrees[0]
    return ModuleComplex.concentrated(result.homology(n).pruned(), n, result.label())


def dual_into(semidualizing, reflexive):
    """
    RHom(C', C) for a C-reflexive C', with gdim_C(RHom(C', C)) = inf(C) - inf(C')
    checked. The result is certified semidualizing only when C' itself is.
    """
    report = gdim(semidualizing, reflexive)
    c_complex, other = as_complex(semidualizing), as_complex(reflexive)
    if not report.is_finite:
        logger.error(f"{other.label()} is not {c_complex.label()}-reflexive")
        raise VerificationError(
            f"{other.label()} is not reflexive with respect to {c_complex.label()}"
        )
    candidate = _concentrated(rhom(other, c_complex))
    expected = inf(c_complex) - inf(other)
    found = gdim(semidualizing, candidate).value
    if found != expected:
        logger.error(f"gdim of RHom({other.label()}, C) is {found}, expected {expected}")
        raise TheoremViolation(
            f"gdim_C(RHom(C', C)) = {found} differs from inf C - inf C' = {expected}"
        )
    if not _accepted(reflexive):
        logger.info(f"{other.label()} is not semidualizing; RHom(C', C) left uncertified")
        return candidate
    return certify(candidate, Construction.REFLEXIVE_DUAL)


def _accepted(candidate) -> bool:
    try:
        return is_semidualizing(candidate).accepted
    except UnsupportedRingError as error:
        logger.debug(f"No semidualizing verdict for {as_complex(candidate).label()}: {error}")
        return False


@dataclass(frozen=True)
class EvaluationReport:
    """Fingerprint comparisons for the two evaluation isomorphisms."""

    tensor_evaluation: bool
    hom_evaluation: bool | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "tensor_evaluation": self.tensor_evaluation,
            "hom_evaluation": self.hom_evaluation,
            **self.details,
        }


def evaluation_checks(semidualizing, reflexive) -> EvaluationReport:
    """
    C' ⊗^L RHom(C', C) ≃ C, and C ≃ RHom(C', C ⊗^L C') when C ⊗^L C' is
    semidualizing; both compared by fingerprint. C' must be semidualizing.
    """
    _require_semidualizing(reflexive)
    c_complex, other = as_complex(semidualizing), as_complex(reflexive)
    dual = dual_into(semidualizing, other)
    tensor_evaluation = fingerprints_agree(derived_tensor(other, dual), c_complex)
    details = {"dual_inf": inf(dual).to_json()}

    hom_evaluation = None
    try:
        product = derived_tensor(c_complex, other)
        if product.is_exact and is_semidualizing(product).accepted:
            hom_evaluation = fingerprints_agree(rhom(other, product), c_complex)
        else:
            details["hom_evaluation"] = "C ⊗^L C' is not semidualizing"
    except UnsupportedRingError as error:
        logger.debug(f"Hom evaluation skipped: {error}")
        details["hom_evaluation"] = f"skipped: {error}"
    if not tensor_evaluation:
        logger.warning(f"Tensor evaluation fingerprints differ for {other.label()}")
    return EvaluationReport(tensor_evaluation, hom_evaluation, details)


def pair_check(semidualizing, other) -> dict:
    """
    For C and a C-reflexive semidualizing C' over a graded-local ring:
    gdim_C(C') = inf C' and amp C' ≤ amp C.
    """
    _require_semidualizing(other)
    c_complex, c_other = as_complex(semidualizing), as_complex(other)
    report = gdim(semidualizing, other)
    if not report.is_finite:
        raise VerificationError(f"{c_other.label()} is not {c_complex.label()}-reflexive")
    other_inf, _, other_amp = inf_sup_amp(c_other)
    _, _, c_amp = inf_sup_amp(c_complex)
    checks = {
        "gdim": report.value.to_json(),
        "inf": other_inf.to_json(),
        "amp": [other_amp.to_json(), c_amp.to_json()],
    }
    if not c_complex.ring.graded_local:
        return checks
    if report.value != other_inf:
        logger.error(f"gdim_C(C') = {report.value} differs from inf C' = {other_inf}")
        raise TheoremViolation(f"gdim_C(C') = {report.value} differs from inf C' = {other_inf}")
    if other_amp > c_amp:
        logger.error(f"amp C' = {other_amp} exceeds amp C = {c_amp}")
        raise TheoremViolation(f"amp C' = {other_amp} exceeds amp C = {c_amp}")
    return checks


def reflexivity_swap(semidualizing, first, second) -> dict:
    """
    B is A-reflexive iff A† is B†-reflexive, where † = RHom(-, C) and A, B
    are C-reflexive semidualizing complexes.
    """
    forward = gdim(first, second).is_finite
    first_dual = dual_into(semidualizing, first)
    second_dual = dual_into(semidualizing, second)
    backward = gdim(second_dual, first_dual).is_finite
    if forward != backward:
        label = f"{as_complex(first).label()}, {as_complex(second).label()}"
        logger.error(f"Reflexivity is not symmetric under duality for ({label})")
        raise TheoremViolation(
            f"B is {'' if forward else 'not '}A-reflexive but A† is "
            f"{'' if backward else 'not '}B†-reflexive for ({label})"
        )
    return {"forward": forward, "backward": backward}
