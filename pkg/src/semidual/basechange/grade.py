"""
Grade profiles of a surjection R -> S = R/J of finite projective dimension.

Everything is read off E = RHom_R(S, R), which is exact because S has a
finite free resolution over R. Ext^i_R(S, R) = H_{-i}(E), so at a prime p
the local grade of J is -sup(E_p).
"""

from dataclasses import dataclass, field
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from semidual.complexes import localized_inf, localized_sup, nonzero_degrees
from semidual.derived import rhom
from semidual.errors import RingMismatchError, TheoremViolation, VerificationError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.modules import FPModule, FreeComplex
from semidual.ring import Ideal, PrimeIdeal

from .enums import MapKind
from .ringmap import RingMap, map_pd

logger = setup_logger()


def fitting_ideal(module: FPModule, index: int) -> Ideal:
    """Fitt_index(M) in the cover: the (g - index)-minors of the relations, plus I."""
    ring = module.ring
    cover = ring.cover
    module = module.pruned()
    g = module.ngens
    size = g - index
    if size <= 0:
        return Ideal(cover, (cover.one,))
    rows = list(module.relations)
    domain = cover.ring.to_domain()
    minors = []
    for chosen_rows in combinations(range(len(rows)), size):
        for chosen_cols in combinations(range(g), size):
            entries = [[rows[i][j] for j in chosen_cols] for i in chosen_rows]
            determinant = DomainMatrix(entries, (size, size), domain).det()
            if determinant:
                minors.append(determinant)
    return Ideal(cover, tuple(minors) + tuple(ring.ideal.generators))


@dataclass(frozen=True)
class GradeEntry:
    """Local data of RHom_R(S, R) at one declared prime of S."""

    prime: str
    inf: ExtInt
    sup: ExtInt

    @property
    def grade(self) -> ExtInt:
        return -self.sup

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "inf": self.inf.to_json(),
            "sup": self.sup.to_json(),
            "grade": self.grade.to_json(),
        }


@dataclass(frozen=True)
class GradeProfile:
    """Cohen-Macaulay, constant-grade and Gorenstein tests for φ."""

    pd: ExtInt
    ext_degrees: tuple[int, ...]
    entries: tuple[GradeEntry, ...] = ()
    cohen_macaulay: bool = False
    constant_grade: bool = False
    gorenstein: bool = False
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "pd": self.pd.to_json(),
            "ext_degrees": list(self.ext_degrees),
            "local": [e.to_dict() for e in self.entries],
            "cm": self.cohen_macaulay,
            "constant_grade": self.constant_grade,
            "gorenstein": self.gorenstein,
            **self.details,
        }


def _disjoint_supports(modules: list[FPModule]) -> bool:
    annihilators = [m.annihilator() for m in modules]
    for i, first in enumerate(annihilators):
        for second in annihilators[i + 1 :]:
            if not (first + second).is_unit:
                return False
    return True


def _default_primes(phi: RingMap) -> tuple[PrimeIdeal, ...]:
    target = phi.target
    if target.graded_local:
        return (target.irrelevant_ideal(),)
    return ()


def grade_profile(phi: RingMap, primes=None) -> GradeProfile:
    """
    φ is Cohen-Macaulay when the nonzero Ext_R^i(S, R) have pairwise disjoint
    supports (each localization of E is concentrated in one degree), of
    constant grade when a single Ext is nonzero, and Gorenstein when it is
    Cohen-Macaulay with every nonzero Ext locally cyclic.
    """
    if phi.kind != MapKind.SURJECTION:
        raise RingMismatchError("Grade profiles are computed for surjections")
    report = map_pd(phi)
    if not report.is_finite:
        logger.error(f"Grade profile of {phi.label()} needs pd_R(S) < ∞")
        raise VerificationError(f"pd_R(S) is infinite for {phi.label()}")

    source = phi.source
    dual = rhom(phi.target_as_module(), FreeComplex.ring_complex(source))
    degrees = nonzero_degrees(dual)
    modules = [dual.homology(n) for n in degrees]

    primes = _default_primes(phi) if primes is None else tuple(primes)
    entries = []
    for prime in primes:
        if prime.ring != phi.target:
            raise RingMismatchError(f"Prime {prime.label} is not a prime of the target")
        local = prime.extend_to(source)
        entries.append(
            GradeEntry(prime.label, localized_inf(dual, local), localized_sup(dual, local))
        )

    cohen_macaulay = _disjoint_supports(modules)
    gorenstein = cohen_macaulay and all(fitting_ideal(m, 1).is_unit for m in modules)
    profile = GradeProfile(
        report.value,
        tuple(-n for n in degrees),
        tuple(entries),
        cohen_macaulay,
        len(degrees) <= 1,
        gorenstein,
    )
    logger.info(
        f"Grade profile of {phi.label()}: cm={profile.cohen_macaulay}, "
        f"constant={profile.constant_grade}, gorenstein={profile.gorenstein}"
    )
    return profile


def ext_concentration(phi: RingMap, module: FPModule) -> dict:
    """
    Ext_R^i(S, C) vanishes for i != d when φ is Cohen-Macaulay of constant
    grade d and C is a semidualizing module; C is taken as given.
    """
    profile = grade_profile(phi)
    if not (profile.cohen_macaulay and profile.constant_grade and profile.ext_degrees):
        raise VerificationError(f"{phi.label()} is not Cohen-Macaulay of constant grade")
    grade = profile.ext_degrees[0]
    result = rhom(phi.target_as_module(), module)
    degrees = [-n for n in nonzero_degrees(result)]
    if any(i != grade for i in degrees):
        logger.error(f"Ext_R^i(S, {module.label()}) nonzero for i in {degrees}, grade {grade}")
        raise TheoremViolation(
            f"Ext_R^i(S, {module.label()}) is nonzero for i in {degrees}, not only at {grade}"
        )
    return {"grade": grade, "ext_degrees": degrees}
