"""
The checked statements, one function per PropertyTag.

A property returns normally when the instance satisfies the statement,
raises PropertyFailure (or lets a TheoremViolation through) when it does
not, and raises SkipInstance when the instance is outside the statement's
hypotheses or the engine cannot decide it.
"""

from typing import Callable

from semidual.basechange import (
    RingMap,
    amplitude_check,
    cone_tensor_check,
    projective_dimension,
    series_transfer,
    tensor_gdim_bounds,
)
from semidual.complexes import (
    fingerprints_agree,
    hom_complex,
    inf_sup_amp,
    multiplication,
    tensor_complex,
)
from semidual.derived import depth, series_identity
from semidual.duality import dualizing_complex, gdim, pair_check, reflexivity_swap
from semidual.modules import FreeComplex

from .enums import PropertyTag
from .generators import Instance

SERIES_TOP = 4


class PropertyFailure(AssertionError):
    """The instance is a counterexample."""


class SkipInstance(Exception):
    """The instance does not meet the statement's hypotheses."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PropertyFailure(message)


def _as_free(complex_) -> FreeComplex:
    if isinstance(complex_, FreeComplex):
        return complex_
    return FreeComplex.from_module_complex(complex_)


def tensor_bounds(instance: Instance) -> None:
    """
    For P of finite projective dimension with full support: the inf/sup/amp
    inequalities for X ⊗ P, X ≃ 0 iff X ⊗ P ≃ 0, and
    gdim X + inf P ≤ gdim(X ⊗ P) ≤ gdim X + pd P over the dualizing complex.
    """
    report = amplitude_check(instance.complex, instance.partner)
    _require(report["exact_iff"], f"exactness differs after ⊗ P: {report}")
    dual = dualizing_complex(instance.ring)
    bounds = tensor_gdim_bounds(dual, instance.complex, instance.partner)
    if bounds["lower_strict"] is None:
        return
    low, high = bounds["gdim_X"] + bounds["inf_P"], bounds["gdim_X"] + bounds["pd_P"]
    _require(low <= bounds["gdim_XP"] <= high, f"gdim(X ⊗ P) outside bounds: {bounds}")


def gdim_sup_bound(instance: Instance) -> None:
    """sup X - amp C ≤ gdim_C(X) for C the dualizing complex."""
    dual = dualizing_complex(instance.ring)
    value = gdim(dual, instance.complex).value
    if not value.is_finite:
        raise SkipInstance("gdim is not finite")
    _, x_sup, _ = inf_sup_amp(instance.complex)
    _, _, c_amp = inf_sup_amp(dual)
    _require(x_sup - c_amp <= value, f"sup X - amp C = {x_sup - c_amp} > gdim = {value}")


def gdim_pd(instance: Instance) -> None:
    """gdim_C(P) = pd P for P of finite projective dimension, C = R and C = D."""
    p = projective_dimension(instance.partner)
    ring_complex = FreeComplex.ring_complex(instance.ring)
    for label, semidualizing in (("R", ring_complex), ("D", dualizing_complex(instance.ring))):
        value = gdim(semidualizing, instance.partner).value
        _require(value <= p, f"gdim_{label}(P) = {value} exceeds pd P = {p}")
        _require(value == p, f"gdim_{label}(P) = {value} differs from pd P = {p}")


def auslander_bass(instance: Instance) -> None:
    """gdim_D(X) = depth R - depth X for graded X, and depth(ΣX) = depth X - 1."""
    before, after = depth(instance.complex), depth(instance.complex.shift(1))
    _require(after == before - 1, f"depth ΣX = {after}, depth X - 1 = {before - 1}")
    dual = dualizing_complex(instance.ring)
    value = gdim(dual, instance.complex).value
    if not value.is_finite:
        raise SkipInstance("gdim is not finite")
    expected = depth(instance.ring) - before
    _require(value == expected, f"gdim = {value}, depth R - depth X = {expected}")


def series_identity_check(instance: Instance) -> None:
    """P_C · I_C = I_R through t^4 for C = R and C = D."""
    ring_complex = FreeComplex.ring_complex(instance.ring)
    for label, semidualizing in (("R", ring_complex), ("D", dualizing_complex(instance.ring))):
        product, ring_series, holds = series_identity(semidualizing, SERIES_TOP)
        _require(holds, f"P·I for {label}: {product} differs from I_R = {ring_series}")


def series_transfer_check(instance: Instance) -> None:
    """Poincare and Bass series along R -> R/(f) for a nonzerodivisor f."""
    phi = RingMap.surjection(instance.ring, [instance.element], "R -> R/(f)")
    ring_complex = FreeComplex.ring_complex(instance.ring)
    for label, semidualizing in (("R", ring_complex), ("D", dualizing_complex(instance.ring))):
        result = series_transfer(semidualizing, phi, SERIES_TOP)
        _require(result.poincare_agrees, f"Poincare series of {label} change along R -> R/(f)")
        _require(result.bass_agrees is not False, f"Bass series of {label} fail I_R · I_φ")


def standard_morphisms(instance: Instance) -> None:
    """
    F ⊗ G ≃ G ⊗ F, (F ⊗ G) ⊗ H ≃ F ⊗ (G ⊗ H), Hom(F ⊗ G, H) ≃ Hom(F, Hom(G, H)),
    tensor evaluation Hom(F, G) ⊗ H ≃ Hom(F, G ⊗ H) and Hom evaluation
    F ⊗ Hom(G, H) ≃ Hom(Hom(F, G), H), compared by fingerprints.
    """
    first, second, third = instance.free_complexes
    left = tensor_complex(first, second)
    _require(
        fingerprints_agree(left, tensor_complex(second, first)), "F ⊗ G and G ⊗ F differ"
    )
    _require(
        fingerprints_agree(
            tensor_complex(third, left), tensor_complex(first, tensor_complex(second, third))
        ),
        "(F ⊗ G) ⊗ H and F ⊗ (G ⊗ H) differ",
    )
    _require(
        fingerprints_agree(
            hom_complex(_as_free(left), third), hom_complex(first, hom_complex(second, third))
        ),
        "Hom(F ⊗ G, H) and Hom(F, Hom(G, H)) differ",
    )
    inner = hom_complex(first, second)
    _require(
        fingerprints_agree(
            tensor_complex(third, inner), hom_complex(first, tensor_complex(third, second))
        ),
        "Hom(F, G) ⊗ H and Hom(F, G ⊗ H) differ",
    )
    _require(
        fingerprints_agree(
            tensor_complex(first, hom_complex(second, third)),
            hom_complex(_as_free(inner), third),
        ),
        "F ⊗ Hom(G, H) and Hom(Hom(F, G), H) differ",
    )


def cone_tensor(instance: Instance) -> None:
    """cone(g·X ⊗ P) is exact iff cone(g·X) is, for g = 1, 0 and the last variable."""
    cover = instance.ring.cover
    for label, element in (("1", cover.one), ("0", cover.zero), ("f", instance.element)):
        report = cone_tensor_check(multiplication(instance.complex, element), instance.partner)
        if report["hypothesis"] != "certified":
            raise SkipInstance("P does not have full support")
        if label == "1":
            _require(report["cone_exact"], "multiplication by 1 is not a quasi-isomorphism")


def semidualizing_pairs(instance: Instance) -> None:
    """
    gdim_C(C') = inf C' and amp C' ≤ amp C for (C, C') = (D, R), and for (R, D)
    when D is R-reflexive; R is D-reflexive iff RHom(D, D) is RHom(R, D)-reflexive.
    """
    if not instance.ring.graded_local:
        raise SkipInstance("the ring is not graded-local")
    dual = dualizing_complex(instance.ring)
    ring_complex = FreeComplex.ring_complex(instance.ring)
    pair_check(dual, ring_complex)
    swap = reflexivity_swap(dual, dual, ring_complex)
    _require(swap["forward"], "R is not D-reflexive")
    if gdim(ring_complex, dual).is_finite:
        pair_check(ring_complex, dual)


def broken_sup_bound(instance: Instance) -> None:
    """The false statement sup X ≤ gdim_D(X) - 1."""
    dual = dualizing_complex(instance.ring)
    value = gdim(dual, instance.complex).value
    if not value.is_finite:
        raise SkipInstance("gdim is not finite")
    _, x_sup, _ = inf_sup_amp(instance.complex)
    _require(x_sup <= value - 1, f"sup X = {x_sup} > gdim - 1 = {value - 1}")


PROPERTIES: dict[PropertyTag, Callable[[Instance], None]] = {
    PropertyTag.TENSOR_BOUNDS: tensor_bounds,
    PropertyTag.GDIM_SUP_BOUND: gdim_sup_bound,
    PropertyTag.GDIM_PD: gdim_pd,
    PropertyTag.AUSLANDER_BASS: auslander_bass,
    PropertyTag.SERIES_IDENTITY: series_identity_check,
    PropertyTag.SERIES_TRANSFER: series_transfer_check,
    PropertyTag.STANDARD_MORPHISMS: standard_morphisms,
    PropertyTag.CONE_TENSOR: cone_tensor,
    PropertyTag.SEMIDUALIZING_PAIRS: semidualizing_pairs,
    PropertyTag.BROKEN_SUP_BOUND: broken_sup_bound,
}

NEEDS_NONZERODIVISOR = {
    PropertyTag.TENSOR_BOUNDS,
    PropertyTag.GDIM_PD,
    PropertyTag.SERIES_TRANSFER,
    PropertyTag.CONE_TENSOR,
}
