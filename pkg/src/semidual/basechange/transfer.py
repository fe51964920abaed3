"""
Base change C ⊗^L_R S, cobase change RHom_R(S, C) and the transfer
statements that compare invariants on both sides of φ: R -> S.

Every comparison carries the hypothesis flag of the map. In the
graded-local model "every maximal ideal of R is contracted from S" is
certified for graded objects along a map whose kernel sits in the
irrelevant ideal; an ungraded object is only local-like after
localization, so its comparisons are reported as unverified.
"""

from dataclasses import dataclass, field

from semidual.complexes import (
    cone,
    fingerprints_agree,
    inf,
    inf_sup_amp,
    is_exact,
    truncate_above,
    truncate_free,
)
from semidual.derived import (
    CoverDual,
    DerivedResult,
    LaurentPoly,
    WindowCertificate,
    as_complex,
    bass_series,
    default_cutoff,
    derived_tensor,
    finite_free_replacement,
    free_replacement,
    module_representative,
    poincare_series,
    rhom,
)
from semidual.duality import (
    Construction,
    GDimReport,
    Verdict,
    certify,
    gdim,
    is_semidualizing,
)
from semidual.errors import (
    TheoremViolation,
    UnsupportedRingError,
    VerificationError,
)
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.modules import FreeComplex, resolve
from semidual.modules.resolution import is_graded_complex
from semidual.ring import QuotientRing

from .enums import DescentKind, HypothesisStatus, MapKind
from .ringmap import RingMap, is_regular_sequence, map_pd

logger = setup_logger()


def _is_graded(source) -> bool:
    complex_ = as_complex(source)
    representative = module_representative(complex_)
    if representative is None:
        representative = complex_.over_cover()
    return is_graded_complex(representative)


def effective_status(phi: RingMap, *objects) -> HypothesisStatus:
    """The map's hypothesis flag, downgraded when an object leaves the graded model."""
    status = phi.hypothesis()
    if status == HypothesisStatus.CERTIFIED and not all(_is_graded(o) for o in objects):
        return HypothesisStatus.UNVERIFIED
    return status


def _local_like(phi: RingMap, *objects) -> bool:
    """R graded-local, φ graded and every object graded."""
    if not phi.source.graded_local or not phi.annihilator().is_homogeneous:
        return False
    return all(_is_graded(o) for o in objects)


def _violation(message: str):
    logger.error(message)
    raise TheoremViolation(message)


def _require_finite_pd(phi: RingMap) -> int:
    report = map_pd(phi)
    if not report.is_finite:
        logger.error(f"pd_R(S) is infinite for {phi.label()}")
        raise VerificationError(f"pd_R(S) is infinite for {phi.label()}")
    return max(report.value.value, 0) if report.value.is_finite else 0


def _verdict(source):
    try:
        return is_semidualizing(source)
    except UnsupportedRingError as error:
        logger.debug(f"No semidualizing verdict for {as_complex(source).label()}: {error}")
        return None


@dataclass
class TransferResult:
    """An S-complex obtained from an R-complex, with what is known about it."""

    complex: object
    certificate: WindowCertificate
    construction: Construction | None
    hypothesis: HypothesisStatus
    checks: dict = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.certificate.is_exact

    def to_dict(self) -> dict:
        data = {
            "certificate": str(self.certificate),
            "hypothesis": self.hypothesis.value,
            "checks": dict(self.checks),
        }
        if self.construction is not None:
            data["construction"] = self.construction.value
        if self.is_exact:
            low, high, spread = inf_sup_amp(self.complex)
            data.update(inf=low.to_json(), sup=high.to_json(), amp=spread.to_json())
        return data


# --- base change -----------------------------------------------------------


def _tensor_dual(dual: CoverDual, phi: RingMap) -> CoverDual | None:
    """D ⊗^L S = Σ^c RHom_R(S, D) for S = R/(f) with f Koszul-regular of length c."""
    if phi.kind != MapKind.SURJECTION or not phi.kernel:
        return None
    if not is_regular_sequence(phi.source, phi.kernel):
        return None
    return CoverDual(phi.target, dual.offset + len(phi.kernel), f"{dual.label()} ⊗ S")


def _tensor(source, phi: RingMap) -> tuple[object, WindowCertificate]:
    complex_ = as_complex(source)
    if isinstance(complex_, CoverDual):
        found = _tensor_dual(complex_, phi)
        if found is not None:
            return found, WindowCertificate.exact()

    free = finite_free_replacement(complex_)
    if free is not None:
        return phi.push_complex(free), WindowCertificate.exact()

    report = map_pd(phi)
    if report.is_finite:
        representative = module_representative(complex_)
        if representative is None:
            if phi.kind != MapKind.SURJECTION:
                raise UnsupportedRingError(
                    f"{complex_.label()} has no R-module model to push along {phi.label()}"
                )
            product = derived_tensor(complex_, phi.target_as_module())
            return phi.transport(product, f"{complex_.label()} ⊗ S"), WindowCertificate.exact()
        _, high, _ = inf_sup_amp(representative)
        top = int(high) + max(int(report.value), 0)
        resolution = resolve(representative, top + 2)
        truncated = truncate_free(resolution.complex, resolution.complex.lo, top + 2)
        pushed = truncate_above(phi.push_complex(truncated), top)
        pushed.name = f"{complex_.label()} ⊗ S"
        return pushed, WindowCertificate.exact()

    cutoff, kind = default_cutoff(complex_, FreeComplex.ring_complex(phi.source))
    free, certificate = free_replacement(complex_, cutoff, kind)
    logger.warning(f"{complex_.label()} ⊗ S along {phi.label()} is only known on {certificate}")
    return DerivedResult(phi.push_complex(free), certificate), certificate


def base_change(source, phi: RingMap) -> TransferResult:
    """
    C ⊗^L_R S. A theorem-backed semidualizing C passes its certificate on;
    for accepted C the bounds inf(C ⊗ S) ≥ inf(C) and amp(C ⊗ S) ≤ amp(C)
    are checked, with equality of inf under a certified hypothesis.
    """
    complex_ = as_complex(source)
    result, certificate = _tensor(source, phi)
    status = effective_status(phi, complex_)
    verdict = _verdict(source)
    construction = None
    checks: dict = {}

    if verdict is not None and verdict.outcome == Verdict.YES and certificate.is_exact:
        certify(result, Construction.BASE_CHANGE)
        construction = Construction.BASE_CHANGE

    if verdict is not None and verdict.accepted and certificate.is_exact:
        low, _, spread = inf_sup_amp(complex_)
        new_low, _, new_spread = inf_sup_amp(result)
        checks = {
            "inf": [low.to_json(), new_low.to_json()],
            "amp": [spread.to_json(), new_spread.to_json()],
        }
        if new_low < low or new_spread > spread:
            _violation(
                f"Base change of {complex_.label()}: inf {low} -> {new_low}, "
                f"amp {spread} -> {new_spread}"
            )
        if status == HypothesisStatus.CERTIFIED and new_low != low:
            _violation(f"inf({complex_.label()} ⊗ S) = {new_low} differs from inf C = {low}")
    logger.info(f"Base change of {complex_.label()} along {phi.label()}: {certificate}")
    return TransferResult(result, certificate, construction, status, checks)


# --- cobase change ---------------------------------------------------------


def _hom_from_target(source, phi: RingMap):
    complex_ = as_complex(source)
    if isinstance(complex_, CoverDual):
        offset = complex_.offset
        if phi.kind == MapKind.MODULE_FINITE:
            offset += phi.extra_variables
        return CoverDual(phi.target, offset, f"RHom(S, {complex_.label()})")
    if phi.kind != MapKind.SURJECTION:
        raise UnsupportedRingError(
            f"RHom(S, {complex_.label()}) over a module-finite map is computed only for "
            "dualizing complexes"
        )
    result = rhom(phi.target_as_module(), complex_)
    return phi.transport(result, f"RHom(S, {complex_.label()})")


def cobase_change(source, phi: RingMap) -> TransferResult:
    """
    RHom_R(S, C) as an S-complex, for pd_R(S) < ∞. For accepted C,
    inf(C) - pd_R(S) ≤ inf(RHom(S, C)) ≤ sup(C) is checked, with equality on
    the left when R is local-like or amp(C) = 0.
    """
    p = _require_finite_pd(phi)
    complex_ = as_complex(source)
    result = _hom_from_target(source, phi)
    status = effective_status(phi, complex_)
    verdict = _verdict(source)
    construction = None
    checks: dict = {}

    if verdict is not None and verdict.outcome == Verdict.YES:
        certify(result, Construction.COBASE_CHANGE)
        construction = Construction.COBASE_CHANGE

    if verdict is not None and verdict.accepted:
        low, high, spread = inf_sup_amp(complex_)
        new_low = inf(result)
        checks = {"inf": [low.to_json(), new_low.to_json()], "pd": p, "sup": high.to_json()}
        if not (low - p <= new_low <= high):
            _violation(
                f"inf RHom(S, {complex_.label()}) = {new_low} outside [{low - p}, {high}]"
            )
        if (_local_like(phi, complex_) or spread == 0) and new_low != low - p:
            _violation(
                f"inf RHom(S, {complex_.label()}) = {new_low}, expected inf C - pd = {low - p}"
            )
    logger.info(f"Cobase change of {complex_.label()} along {phi.label()}")
    return TransferResult(result, WindowCertificate.exact(), construction, status, checks)


# --- descent of G_C-dimension ----------------------------------------------


@dataclass(frozen=True)
class DescentReport:
    """gdim over R and over S with the (in)equalities that were evaluated."""

    kind: DescentKind
    source: GDimReport
    target: GDimReport
    hypothesis: HypothesisStatus
    asserted: tuple[str, ...] = ()

    @property
    def agree(self) -> bool:
        return self.source.value == self.target.value

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "gdim_R": self.source.to_dict(),
            "gdim_S": self.target.to_dict(),
            "hypothesis": self.hypothesis.value,
            "asserted": list(self.asserted),
        }


def descent_gdim(
    semidualizing, source, phi: RingMap, kind: DescentKind = DescentKind.TENSOR
) -> DescentReport:
    """
    Compare gdim_C(X) with the G-dimension of X ⊗^L S over C ⊗^L S
    (`tensor`) or over RHom_R(S, C) (`cobase`). Both sides are always
    computed; the equality statements are asserted only under a certified
    hypothesis and a mismatch raises TheoremViolation.
    """
    c_complex, x_complex = as_complex(semidualizing), as_complex(source)
    before = gdim(semidualizing, source)
    pushed = base_change(source, phi)
    if kind == DescentKind.TENSOR:
        over = base_change(semidualizing, phi)
    else:
        over = cobase_change(semidualizing, phi)
    after = gdim(over.complex, pushed.complex)
    status = effective_status(phi, c_complex, x_complex)
    _, _, spread = inf_sup_amp(c_complex)
    value_r, value_s = before.value, after.value
    asserted = []

    if kind == DescentKind.TENSOR:
        asserted.append("gdim_S ≤ amp C + gdim_R")
        if value_s > value_r + spread:
            _violation(f"gdim over S = {value_s} exceeds amp C + gdim over R = {value_r}")
    else:
        p = _require_finite_pd(phi)
        asserted.append("gdim_S ≤ gdim_R + amp C + pd")
        if value_s > value_r + spread + p:
            _violation(f"gdim over S = {value_s} exceeds gdim_R + amp C + pd")
        if status == HypothesisStatus.CERTIFIED:
            asserted.append("gdim_R - pd ≤ gdim_S ≤ gdim_R + pd")
            if value_r.is_finite and not (value_r - p <= value_s <= value_r + p):
                _violation(f"gdim over S = {value_s} outside gdim_R ± {p}")
    if status == HypothesisStatus.CERTIFIED:
        asserted.append("gdim_S = gdim_R")
        if value_s != value_r:
            _violation(f"gdim over S = {value_s} differs from gdim over R = {value_r}")
    else:
        logger.warning(f"Descent along {phi.label()}: hypothesis {status.value}")
    return DescentReport(kind, before, after, status, tuple(asserted))


# --- Poincare and Bass series ----------------------------------------------


@dataclass(frozen=True)
class SeriesTransfer:
    """Truncated series on both sides of φ and the identities between them."""

    poincare: tuple[LaurentPoly, LaurentPoly]
    bass: tuple[LaurentPoly, LaurentPoly]
    ring_bass: tuple[LaurentPoly, LaurentPoly]
    quotient: LaurentPoly | None
    poincare_agrees: bool
    bass_agrees: bool | None
    top: int

    def to_dict(self) -> dict:
        return {
            "N": self.top,
            "P_R": self.poincare[0].to_dict(),
            "P_S": self.poincare[1].to_dict(),
            "I_R": self.bass[0].to_dict(),
            "I_S": self.bass[1].to_dict(),
            "I_R^R": self.ring_bass[0].to_dict(),
            "I_S^S": self.ring_bass[1].to_dict(),
            "I_phi": self.quotient.to_dict() if self.quotient is not None else None,
            "poincare_agrees": self.poincare_agrees,
            "bass_agrees": self.bass_agrees,
        }


def _ring_complex(ring: QuotientRing) -> FreeComplex:
    return FreeComplex.ring_complex(ring)


def series_transfer(source, phi: RingMap, top: int) -> SeriesTransfer:
    """
    P^S_{C⊗S} = P^R_C and I_S^{C⊗S} = I_R^C · I_φ through t^top, where
    I_φ = I_S^S / I_R^R is computed as a truncated quotient.
    """
    if not phi.source.graded_local or not phi.target.graded_local:
        logger.error(f"Series transfer along {phi.label()} needs graded-local rings")
        raise UnsupportedRingError("unsupported: use localized invariants")
    _require_finite_pd(phi)
    complex_ = as_complex(source)
    pushed = base_change(source, phi).complex

    poincare = (poincare_series(complex_, top), poincare_series(pushed, top))
    bass = (bass_series(complex_, top), bass_series(pushed, top))
    ring_bass = (
        bass_series(_ring_complex(phi.source), top),
        bass_series(_ring_complex(phi.target), top),
    )
    try:
        quotient = ring_bass[1].quotient(ring_bass[0], top)
    except ValueError as error:
        logger.warning(f"I_φ along {phi.label()} is not integral: {error}")
        quotient = None

    poincare_agrees = poincare[1].agrees(poincare[0], top)
    bass_agrees = None if quotient is None else bass[1].agrees(bass[0] * quotient, top)
    if effective_status(phi, complex_) == HypothesisStatus.CERTIFIED:
        if not poincare_agrees:
            _violation(f"P^S_(C⊗S) = {poincare[1]} differs from P^R_C = {poincare[0]}")
        if bass_agrees is False:
            _violation(f"I_S^(C⊗S) = {bass[1]} differs from I_R^C · I_φ")
    return SeriesTransfer(
        poincare, bass, ring_bass, quotient, poincare_agrees, bass_agrees, top
    )


# --- uniqueness ------------------------------------------------------------


def _trivial_picard(ring: QuotientRing) -> bool:
    """Graded-local, a polynomial ring in one variable, or a finite product of fields."""
    if ring.graded_local:
        return True
    if ring.nvars != 1:
        return False
    if ring.is_cover:
        return True
    basis = ring.ideal.basis
    if len(basis) != 1:
        return False
    relation = basis[0]
    derivative = relation.diff(ring.cover.gens[0])
    return relation.gcd(derivative).is_ground


@dataclass(frozen=True)
class UniquenessReport:
    """C ⊗ S against C' ⊗ S, and C against C'."""

    targets_agree: bool
    sources_agree: bool
    semidualizing: bool
    hypothesis: HypothesisStatus
    asserted: bool
    failure_demonstrated: bool

    def to_dict(self) -> dict:
        return {
            "targets_agree": self.targets_agree,
            "sources_agree": self.sources_agree,
            "semidualizing": self.semidualizing,
            "hypothesis": self.hypothesis.value,
            "asserted": self.asserted,
            "failure_demonstrated": self.failure_demonstrated,
        }


def transfer_uniqueness(first, second, phi: RingMap) -> UniquenessReport:
    """
    Semidualizing C, C' with C ⊗^L S ≃ C' ⊗^L S are isomorphic when every
    maximal ideal is contracted from S and Picard groups are trivial. Both
    comparisons use homology fingerprints.
    """
    if not _trivial_picard(phi.source):
        logger.error(f"{phi.source.describe()} is outside the trivial-Picard classes")
        raise UnsupportedRingError("unsupported Picard class")
    left, right = as_complex(first), as_complex(second)
    targets_agree = fingerprints_agree(
        base_change(first, phi).complex, base_change(second, phi).complex
    )
    sources_agree = fingerprints_agree(left, right)
    verdicts = [_verdict(first), _verdict(second)]
    semidualizing = all(v is not None and v.accepted for v in verdicts)
    status = effective_status(phi, left, right)
    asserted = semidualizing and status == HypothesisStatus.CERTIFIED
    if asserted and targets_agree and not sources_agree:
        _violation(f"{left.label()} and {right.label()} differ but agree after base change")
    failure = targets_agree and not sources_agree and not semidualizing
    if failure:
        logger.info(f"Uniqueness fails for the non-semidualizing {left.label()}, {right.label()}")
    return UniquenessReport(
        targets_agree, sources_agree, semidualizing, status, asserted, failure
    )


# --- tensoring with a complex of finite projective dimension ---------------


def projective_dimension(source) -> ExtInt:
    """pd_R(P) = -inf RHom_R(P, R) for P with a finite free replacement."""
    complex_ = as_complex(source)
    free = finite_free_replacement(complex_)
    if free is None:
        raise VerificationError(f"pd of {complex_.label()} is not finite")
    if is_exact(free):
        return ExtInt.neg_inf()
    return -inf(rhom(free, _ring_complex(free.ring)))


def _support_status(ring: QuotientRing, *objects) -> HypothesisStatus:
    """Every maximal ideal in Supp P: certified for a graded nonexact P over a graded-local R."""
    if not ring.graded_local:
        return HypothesisStatus.UNVERIFIED
    if not all(_is_graded(o) for o in objects):
        return HypothesisStatus.UNVERIFIED
    return HypothesisStatus.CERTIFIED


def amplitude_check(source, partner) -> dict:
    """
    For P with pd_R(P) < ∞: inf(X⊗P) ≥ inf X + inf P and sup(X⊗P) ≤ sup X + pd P.
    When also m-Spec(R) ⊆ Supp(P): inf(X⊗P) ≤ inf X + sup P,
    sup(X⊗P) ≥ sup X + inf P, amp(X⊗P) ≥ amp X - amp P, X ≃ 0 iff X⊗P ≃ 0,
    and inf(X⊗P) = inf X + inf P when amp P = 0.
    """
    x_complex, p_complex = as_complex(source), as_complex(partner)
    if finite_free_replacement(p_complex) is None:
        raise VerificationError(f"{p_complex.label()} needs finite projective dimension")
    product = derived_tensor(x_complex, p_complex)
    x_low, x_high, x_amp = inf_sup_amp(x_complex)
    p_low, p_high, p_amp = inf_sup_amp(p_complex)
    low, high, spread = inf_sup_amp(product)
    status = _support_status(x_complex.ring, p_complex)
    if is_exact(p_complex):
        status = HypothesisStatus.NOT_COVERED
    report = {
        "X": [x_low.to_json(), x_high.to_json(), x_amp.to_json()],
        "P": [p_low.to_json(), p_high.to_json(), p_amp.to_json()],
        "XP": [low.to_json(), high.to_json(), spread.to_json()],
        "hypothesis": status.value,
    }
    if not is_exact(x_complex) and not is_exact(p_complex):
        flat = projective_dimension(p_complex)
        report["outer"] = [(x_low + p_low).to_json(), (x_high + flat).to_json()]
        if low < x_low + p_low or high > x_high + flat:
            _violation(
                f"inf(X ⊗ P) = {low} below inf X + inf P or sup(X ⊗ P) = {high} "
                f"above sup X + pd P for {x_complex.label()} ⊗ {p_complex.label()}"
            )
    if status != HypothesisStatus.CERTIFIED or is_exact(x_complex):
        report["exact_iff"] = is_exact(x_complex) == is_exact(product)
        return report
    if low > x_low + p_high or high < x_high + p_low or spread < x_amp - p_amp:
        _violation(f"Amplitude inequalities fail for {x_complex.label()} ⊗ {p_complex.label()}")
    if is_exact(product):
        _violation(f"{x_complex.label()} ⊗ {p_complex.label()} is exact but X is not")
    if p_amp == 0 and low != x_low + p_low:
        _violation(f"inf(X ⊗ P) = {low} differs from inf X + inf P = {x_low + p_low}")
    report["exact_iff"] = True
    return report


def cone_tensor_check(chain_map, partner) -> dict:
    """
    cone(α ⊗ P) is exact iff cone(α) is, for P of finite projective dimension
    with every maximal ideal in its support. Both sides are reported either way.
    """
    p_complex = as_complex(partner)
    if finite_free_replacement(p_complex) is None:
        raise VerificationError(f"{p_complex.label()} needs finite projective dimension")
    mapping_cone = cone(chain_map)
    product = derived_tensor(mapping_cone, p_complex)
    status = _support_status(mapping_cone.ring, p_complex)
    if is_exact(p_complex):
        status = HypothesisStatus.NOT_COVERED
    before, after = is_exact(mapping_cone), is_exact(product)
    if status == HypothesisStatus.CERTIFIED and before != after:
        _violation(f"{mapping_cone.label()} is exact only on one side of ⊗ {p_complex.label()}")
    return {"cone_exact": before, "tensor_cone_exact": after, "hypothesis": status.value}


def tensor_gdim_bounds(semidualizing, source, partner) -> dict:
    """
    gdim_C(X) + inf P ≤ gdim_C(X ⊗ P) ≤ gdim_C(X) + pd P, with equality on
    the right when R is local-like or amp RHom(P, R) = 0.
    """
    x_complex, p_complex = as_complex(source), as_complex(partner)
    p = projective_dimension(p_complex)
    before = gdim(semidualizing, x_complex).value
    product = derived_tensor(x_complex, p_complex)
    after = gdim(semidualizing, product).value
    low = inf(p_complex)
    status = _support_status(x_complex.ring, x_complex, p_complex)
    report = {
        "gdim_X": before.to_json(),
        "gdim_XP": after.to_json(),
        "inf_P": low.to_json(),
        "pd_P": p.to_json(),
        "hypothesis": status.value,
        "lower_strict": None,
        "upper_strict": None,
    }
    if not before.is_finite or not after.is_finite:
        if before.is_finite != after.is_finite and status == HypothesisStatus.CERTIFIED:
            _violation(f"{x_complex.label()} and X ⊗ P are not reflexive together")
        return report
    report["lower_strict"] = before + low < after
    report["upper_strict"] = after < before + p
    if after < before + low or after > before + p:
        if status == HypothesisStatus.CERTIFIED:
            _violation(f"gdim(X ⊗ P) = {after} outside [{before + low}, {before + p}]")
    dual_spread = inf_sup_amp(rhom(p_complex, _ring_complex(p_complex.ring)))[2]
    if status == HypothesisStatus.CERTIFIED and dual_spread == 0 and after != before + p:
        _violation(f"gdim(X ⊗ P) = {after} differs from gdim X + pd P = {before + p}")
    return report
