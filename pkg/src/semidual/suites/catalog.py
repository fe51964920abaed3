"""
Builders for the worked-example suites.

Each builder takes the coefficient field, constructs the rings, modules and
complexes of one example and returns the observed invariants as a flat dict.
The YAML suite files hold the expected values; builders only compute.
"""

from typing import Any, Callable

from semidual.basechange import (
    RingMap,
    base_change,
    cobase_change,
    descent_gdim,
    grade_profile,
    map_pd,
    projective_dimension,
    series_transfer,
    tensor_gdim_bounds,
    transfer_uniqueness,
)
from semidual.complexes import (
    cone,
    direct_sum,
    fingerprints_agree,
    inf_sup_amp,
    is_exact,
    localized_agree,
    localized_amp,
    localized_degrees,
    localized_inf,
)
from semidual.derived import depth, derived_tensor
from semidual.duality import dualizing_complex, gdim, is_semidualizing, localized_gdim
from semidual.logging import setup_logger
from semidual.modules import ChainMap, FPModule, FreeComplex, Matrix, ModuleComplex
from semidual.ring import Ideal, Localization, PolyRing, PrimeIdeal, QuotientRing

logger = setup_logger()

Builder = Callable[[Any], dict]

SERIES_TOP = 4


def _ring(field, names: str, relations: list[str], name: str) -> QuotientRing:
    cover = PolyRing(tuple(names.split()), field)
    return QuotientRing.from_text(cover, relations, name)


def _cyclic(ring: QuotientRing, texts: list[str], name: str, twist: int = 0) -> FPModule:
    return FPModule.cyclic(ring, [ring.parse(t) for t in texts], twist, name)


def _at(module: FPModule, degree: int = 0) -> ModuleComplex:
    return ModuleComplex.concentrated(module, degree)


def _triple(complex_) -> list:
    return [value.to_json() for value in inf_sup_amp(complex_)]


def nonconstant_grade(field) -> dict:
    """R = k[Y,Z] onto R/((Y,Z) ∩ (Y-1)): Cohen-Macaulay and Gorenstein, grade 2 and 1."""
    ring = _ring(field, "Y Z", [], "R")
    cover = ring.cover
    origin = Ideal.parse(cover, ["Y", "Z"])
    line = Ideal.parse(cover, ["Y - 1"])
    phi = RingMap.surjection(ring, origin.intersect(line).basis, "R -> S")
    target = phi.target
    primes = [
        PrimeIdeal.parse(target, ["Y", "Z"], "n1"),
        PrimeIdeal.parse(target, ["Y - 1", "Z"], "n2"),
    ]
    profile = grade_profile(phi, primes)
    local = {entry.prime: entry for entry in profile.entries}
    return {
        "pd": profile.pd,
        "ext_degrees": sorted(profile.ext_degrees),
        "inf_n1": local["n1"].inf,
        "inf_n2": local["n2"].inf,
        "grade_n1": local["n1"].grade,
        "grade_n2": local["n2"].grade,
        "cohen_macaulay": profile.cohen_macaulay,
        "constant_grade": profile.constant_grade,
        "gorenstein": profile.gorenstein,
    }


def reflexive_negative_gdim(field) -> dict:
    """A reflexive module of negative G-dimension over k[Y,Z]/(Y^2, YZ)."""
    ring = _ring(field, "Y Z", ["Y^2", "Y*Z"], "R")
    module = _cyclic(ring, ["Y"], "R/(Y)")
    dual = dualizing_complex(ring)
    report = gdim(dual, module)
    low, high, _ = inf_sup_amp(dual)
    return {
        "depth_R": depth(ring),
        "depth_X": depth(module),
        "gdim_X": report.value,
        "gdim_certificate": report.certificate.value,
        "ab_checked": report.ab_check is not None,
        "gdim_D": gdim(dual, dual).value,
        "inf_D": low,
        "sup_D": high,
    }


def strict_inequalities(field) -> dict:
    """
    A = k[X,Y,Z]/(Y^2, YZ) semilocalized at m = (X,Y) and n = (Y,Z), S = A/(X),
    D with H_1 at m and H_0, H_1 at n. Every comparison along A -> S is strict.
    """
    ring = _ring(field, "X Y Z", ["Y^2", "Y*Z"], "A")
    phi = RingMap.surjection(ring, [ring.parse("X")], "A -> S")
    target = phi.target
    m = PrimeIdeal.parse(ring, ["X", "Y"], "m")
    n = PrimeIdeal.parse(ring, ["Y", "Z"], "n")
    semilocal = Localization(ring, (m, n))
    m_target = PrimeIdeal.parse(target, ["X", "Y"], "mS")
    dual = dualizing_complex(ring, shift=2)

    p = map_pd(phi).value
    module = phi.target_as_module()
    target_ring = FreeComplex.ring_complex(target)
    hom_side = cobase_change(dual, phi).complex
    tensor_side = base_change(dual, phi).complex

    inf_dual = localized_inf(dual, semilocal)
    amp_dual = localized_amp(dual, semilocal)
    inf_tensor = localized_inf(tensor_side, m_target)
    amp_tensor = localized_amp(tensor_side, m_target)
    inf_hom = localized_inf(hom_side, m_target)
    gdim_semilocal = localized_gdim(dual, module, semilocal)
    gdim_m = localized_gdim(dual, module, m)
    gdim_n = localized_gdim(dual, module, n)
    gdim_hom = localized_gdim(hom_side, target_ring, m_target)
    series = series_transfer(dual, phi, SERIES_TOP)
    return {
        "pd": p,
        "D_n_degrees": localized_degrees(dual, n),
        "D_m_is_shifted_A": localized_agree(dual, FreeComplex.ring_complex(ring, 1), m),
        "inf_D": inf_dual,
        "amp_D": amp_dual,
        "tensor_inf": inf_tensor,
        "tensor_amp": amp_tensor,
        "tensor_is_shifted_S": localized_agree(
            tensor_side, FreeComplex.ring_complex(target, 1), m_target
        ),
        "rhom_inf": inf_hom,
        "rhom_is_S": localized_agree(hom_side, target_ring, m_target),
        "inf_D_minus_pd": inf_dual - p,
        "gdim_D_S": gdim_semilocal,
        "gdim_local_m": gdim_m,
        "gdim_local_n": gdim_n,
        "gdim_cobase_plus_pd": gdim_hom + p,
        "series_poincare_agrees": series.poincare_agrees,
        "series_bass_agrees": series.bass_agrees,
        "strict": [
            gdim_semilocal < max(gdim_m, gdim_n),
            gdim_semilocal < p,
            inf_dual < inf_tensor,
            amp_tensor < amp_dual,
            inf_dual - p < inf_hom,
            gdim_semilocal < gdim_hom + p,
        ],
    }


def uncovered_max_spec(field) -> dict:
    """
    R = k[U,V,Y]/(U^2, UV) onto R/(Y - 1): the maximal ideal of R is not
    contracted, and gdim drops from ∞ to 0.
    """
    ring = _ring(field, "U V Y", ["U^2", "U*V"], "R")
    module = FPModule.residue_field(ring).direct_sum(FPModule.free(ring, 1))
    phi = RingMap.surjection(ring, [ring.parse("Y - 1")], "R -> S")
    report = descent_gdim(FreeComplex.ring_complex(ring), module, phi)
    pushed = base_change(module, phi).complex
    return {
        "gdim_R": report.source.value,
        "gdim_R_certificate": report.source.certificate.value,
        "witness_degree": report.source.witness_degree,
        "gdim_S": report.target.value,
        "hypothesis": report.hypothesis.value,
        "pushed_is_S": fingerprints_agree(pushed, FreeComplex.ring_complex(phi.target)),
    }


def non_flat_uniqueness(field) -> dict:
    """R/(Y) and R/(Z) over k[Y,Z] agree after ⊗ k without being isomorphic."""
    ring = _ring(field, "Y Z", [], "R")
    first = _at(_cyclic(ring, ["Y"], "R/(Y)"))
    second = _at(_cyclic(ring, ["Z"], "R/(Z)"))
    phi = RingMap.surjection(ring, [ring.parse("Y"), ring.parse("Z")], "R -> k")
    report = transfer_uniqueness(first, second, phi)
    tensor_side = base_change(first, phi).complex
    target = phi.target
    expected = direct_sum(
        FreeComplex.ring_complex(target), FreeComplex.ring_complex(target, 1, twist=1)
    )
    return {
        "targets_agree": report.targets_agree,
        "sources_agree": report.sources_agree,
        "semidualizing": report.semidualizing,
        "failure_demonstrated": report.failure_demonstrated,
        "tensor": _triple(tensor_side),
        "tensor_is_S_plus_shift": fingerprints_agree(tensor_side, expected),
    }


def tensor_amplitude(field) -> dict:
    """
    Tensoring with complexes of finite projective dimension over k[Y]:
    amplitude can collapse, exactness can appear, and the gdim bounds are
    strict on one side only.
    """
    ring = _ring(field, "Y", [], "R")
    residue = _cyclic(ring, ["Y"], "R/(Y)")
    unit_point = _cyclic(ring, ["Y - 1"], "R/(Y-1)")
    free = FPModule.free(ring, 1, "R")

    x_one = _at(residue)
    p_one = direct_sum(_at(unit_point), _at(free, 1), _at(unit_point, 2))

    alpha = ChainMap(
        _at(free),
        _at(residue.direct_sum(free)),
        {0: Matrix.from_rows(ring, [(ring.one,), (ring.one,)])},
    )
    x_two = cone(alpha)
    p_two = _at(unit_point)

    x_three = direct_sum(_at(free), *[_at(residue, i) for i in range(-2, 3)])
    x_three_p = derived_tensor(x_three, p_two)

    p_three = direct_sum(_at(free), _at(unit_point))
    phi = RingMap.surjection(ring, [ring.parse("Y")], "R -> R/(Y)")
    p_three_target = base_change(p_three, phi).complex
    bounds = tensor_gdim_bounds(FreeComplex.ring_complex(ring), x_one, p_three)
    return {
        "x1p1": _triple(derived_tensor(x_one, p_one)),
        "p1": _triple(p_one),
        "p1_pd": projective_dimension(p_one),
        "x2_exact": is_exact(x_two),
        "x2p2_exact": is_exact(derived_tensor(x_two, p_two)),
        "x3_amp": inf_sup_amp(x_three)[2],
        "x3p2_amp": inf_sup_amp(x_three_p)[2],
        "x3p2_is_P2": fingerprints_agree(x_three_p, p_two),
        "p3_verdict": is_semidualizing(p_three).outcome.value,
        "p3s_semidualizing": is_semidualizing(p_three_target).accepted,
        "p3s_is_S": fingerprints_agree(p_three_target, FreeComplex.ring_complex(phi.target)),
        "gdim_X1": bounds["gdim_X"],
        "gdim_X1P3": bounds["gdim_XP"],
        "pd_P3": bounds["pd_P"],
        "lower_strict": bounds["lower_strict"],
        "upper_strict": bounds["upper_strict"],
    }


def _dualizing_over_regular(ring: QuotientRing, candidate, verdict) -> bool:
    """
    Over a regular ring of dimension d every semidualizing complex is dualizing,
    and Ext^i(C, C) vanishes for i > amp C + d, so a window reaching that far is complete.
    """
    if not verdict.accepted or not ring.is_evidently_regular():
        return False
    if verdict.window is None:
        return True
    low, high, _ = inf_sup_amp(candidate)
    return candidate.hi - verdict.window < int(low) - int(high) - ring.krull_dim()


def product_of_fields(field) -> dict:
    """k[T]/(T^2 - T) with a semidualizing complex of amplitude 1 that is locally a ring."""
    ring = _ring(field, "T", ["T^2 - T"], "R")
    candidate = direct_sum(
        _at(_cyclic(ring, ["T"], "R/(T)")), _at(_cyclic(ring, ["T - 1"], "R/(T-1)"), 1)
    )
    verdict = is_semidualizing(candidate)
    first = PrimeIdeal.parse(ring, ["T"], "p0")
    second = PrimeIdeal.parse(ring, ["T - 1"], "p1")
    return {
        "verdict": verdict.outcome.value,
        "dualizing": _dualizing_over_regular(ring, candidate, verdict),
        "amp": inf_sup_amp(candidate)[2],
        "amp_p0": localized_amp(candidate, first),
        "amp_p1": localized_amp(candidate, second),
    }


def two_point_tensor(field) -> dict:
    """The dualizing complex of a tensor product of two non-CM curves, at two points."""
    ring = _ring(field, "X1 Y1 X2 Y2", ["X1^2", "X1*Y1", "X2^2", "X2*Y2"], "A")
    dual = dualizing_complex(ring, normalize=False)
    semilocal = Localization(
        ring,
        (
            PrimeIdeal.parse(ring, ["X1", "Y1", "X2"], "n1"),
            PrimeIdeal.parse(ring, ["X1", "X2", "Y2"], "n2"),
        ),
    )
    return {
        "inf_D": localized_inf(dual, semilocal),
        "amp_D": localized_amp(dual, semilocal),
    }


BUILDERS: dict[str, Builder] = {
    "nonconstant-grade": nonconstant_grade,
    "reflexive-negative-gdim": reflexive_negative_gdim,
    "strict-inequalities": strict_inequalities,
    "uncovered-max-spec": uncovered_max_spec,
    "non-flat-uniqueness": non_flat_uniqueness,
    "tensor-amplitude": tensor_amplitude,
    "product-of-fields": product_of_fields,
    "two-point-tensor": two_point_tensor,
}


def get_builder(name: str) -> Builder:
    builder = BUILDERS.get(name)
    if builder is None:
        logger.error(f"No builder registered for {name!r}")
        raise ValueError(f"Unknown suite builder {name!r}; known: {', '.join(sorted(BUILDERS))}")
    return builder
