"""
Ring maps φ: R -> S of the two kinds the engine supports.

A surjection S = R/J shares R's cover, so R-complexes move to S by reducing
their entries. A module-finite map has a cover extending R's by extra
variables and carries a presentation of S as an R-module on chosen
generators, one of which is 1.
"""

from dataclasses import dataclass

from semidual.complexes import koszul
from semidual.derived import CoverModel
from semidual.errors import RingMismatchError, VerificationError
from semidual.logging import setup_logger
from semidual.memo import cached
from semidual.modules import FPModule, FreeComplex, Matrix, ModuleComplex, PdReport, pd
from semidual.ring import Ideal, QuotientRing

from .enums import HypothesisStatus, MapKind

logger = setup_logger()


@dataclass(frozen=True, eq=False)
class RingMap:
    """φ: R -> S with the data needed to move complexes across it."""

    source: QuotientRing
    target: QuotientRing
    kind: MapKind
    kernel: tuple = ()
    generators: tuple = ()
    presentation: FPModule | None = None
    name: str = ""

    def __post_init__(self):
        if self.kind == MapKind.SURJECTION:
            self._check_surjection()
        else:
            self._check_module_finite()

    # --- construction ------------------------------------------------------

    @classmethod
    def surjection(cls, source: QuotientRing, kernel, name: str = "") -> "RingMap":
        """R -> R/J for J generated by `kernel` (cover polynomials)."""
        kernel = tuple(source.cover.check(f) for f in kernel)
        target = source.quotient(kernel, name=f"{source.name or 'R'}/J" if kernel else source.name)
        return cls(source, target, MapKind.SURJECTION, kernel, name=name)

    @classmethod
    def identity(cls, ring: QuotientRing) -> "RingMap":
        return cls(ring, ring, MapKind.SURJECTION, (), name="id")

    @classmethod
    def module_finite(
        cls,
        source: QuotientRing,
        target: QuotientRing,
        generators,
        presentation: FPModule,
        name: str = "",
    ) -> "RingMap":
        """
        R -> S with S generated over R by `generators` (polynomials of S's
        cover) and presented by `presentation`, whose relations are rows.
        """
        return cls(
            source,
            target,
            MapKind.MODULE_FINITE,
            (),
            tuple(target.cover.check(g) for g in generators),
            presentation,
            name,
        )

    def _check_surjection(self):
        if self.target.cover != self.source.cover:
            raise RingMismatchError("A surjection must keep the cover of its source")
        expected = self.source.ideal.extend(self.kernel)
        if self.target.ideal != expected:
            logger.error(f"Target {self.target.describe()} is not R/J for the declared kernel")
            raise VerificationError(
                f"{self.target.describe()} is not {self.source.describe()} modulo the kernel"
            )

    def _check_module_finite(self):
        source_cover, target_cover = self.source.cover, self.target.cover
        width = source_cover.nvars
        if target_cover.names[:width] != source_cover.names or (
            target_cover.field != source_cover.field
        ):
            raise RingMismatchError("The target cover must extend the source cover")
        if self.presentation is None or self.presentation.ring != self.source:
            raise VerificationError("A module-finite map needs a presentation of S over R")
        if self.presentation.ngens != len(self.generators):
            raise VerificationError(
                f"Presentation has {self.presentation.ngens} generators, "
                f"{len(self.generators)} elements declared"
            )
        target = self.target
        if not any(target.is_zero(g - target.one) for g in self.generators):
            logger.error("No declared generator of S equals 1")
            raise VerificationError("The generators of S over R must include 1")
        for f in self.source.ideal.generators:
            if not target.is_zero(self.push_poly(f)):
                raise VerificationError(f"{self.source.format(f)} does not map to zero in S")
        for relation in self.presentation.relations:
            value = sum(
                (self.push_poly(r) * g for r, g in zip(relation, self.generators)),
                target.zero,
            )
            if not target.is_zero(value):
                logger.error("A declared relation of S over R fails in S")
                raise VerificationError("The presentation of S has a relation that fails in S")

    # --- data --------------------------------------------------------------

    @property
    def extra_variables(self) -> int:
        return self.target.nvars - self.source.nvars

    def label(self) -> str:
        return self.name or f"{self.source.describe()} -> {self.target.describe()}"

    def target_as_module(self) -> FPModule:
        """S regarded as a finitely generated R-module."""
        if self.kind == MapKind.SURJECTION:
            return FPModule.cyclic(self.source, self.kernel, name=self.target.name or "S")
        return self.presentation

    def annihilator(self) -> Ideal:
        """ker φ, as an ideal of R's cover containing R's defining ideal."""
        if self.kind == MapKind.SURJECTION:
            return self.target.ideal
        return self.presentation.annihilator()

    def to_dict(self) -> dict:
        data = {
            "source": self.source.describe(),
            "target": self.target.describe(),
            "target-kind": self.kind.value,
        }
        if self.kind == MapKind.SURJECTION:
            data["kernel-gens"] = [self.source.format(f) for f in self.kernel]
        else:
            data["presentation"] = self.presentation.describe()
        return data

    # --- moving objects across ---------------------------------------------

    def push_poly(self, poly):
        if self.kind == MapKind.SURJECTION:
            return self.target.reduce(poly)
        return self.target.reduce(self.source.cover.embed(poly, self.target.cover))

    def push_matrix(self, matrix: Matrix) -> Matrix:
        if self.kind == MapKind.SURJECTION:
            return matrix.change_ring(self.target)
        columns = [tuple(self.push_poly(e) for e in column) for column in matrix.columns]
        return Matrix.from_columns(self.target, matrix.rows, columns)

    def push_module(self, module: FPModule) -> FPModule:
        """M ⊗_R S."""
        if self.kind == MapKind.SURJECTION:
            return module.change_ring(self.target)
        relations = tuple(tuple(self.push_poly(e) for e in r) for r in module.relations)
        return FPModule(self.target, module.twists, relations, module.name)

    def push_complex(self, complex_: ModuleComplex) -> ModuleComplex:
        """Termwise X ⊗_R S; derived only for complexes of free modules."""
        modules = {n: self.push_module(m) for n, m in complex_.modules.items()}
        differentials = {n: self.push_matrix(d) for n, d in complex_.differentials.items()}
        name = f"{complex_.label()} ⊗ S"
        if complex_.is_free:
            twists = {n: m.twists for n, m in modules.items()}
            return FreeComplex(self.target, twists, differentials, name, check=False)
        return ModuleComplex(self.target, modules, differentials, name, check=False)

    def transport(self, complex_, name: str = "") -> CoverModel:
        """
        An R-complex whose homology is killed by J, viewed over S = R/J
        through its model over the shared cover.
        """
        if self.kind != MapKind.SURJECTION:
            raise RingMismatchError("Only surjections share the cover of their source")
        return CoverModel(self.target, complex_.over_cover(), name or complex_.label())

    # --- invariants --------------------------------------------------------

    def hypothesis(self) -> HypothesisStatus:
        """
        m-Spec(R) ⊆ Im(φ*) in the graded-local model: certified when ker φ is
        homogeneous inside the irrelevant ideal, refuted when it is not inside it.
        """
        if not self.source.graded_local:
            return HypothesisStatus.UNVERIFIED
        kernel = self.annihilator()
        cover = self.source.cover
        if not all(cover.in_irrelevant_ideal(f) for f in kernel.basis):
            return HypothesisStatus.NOT_COVERED
        if kernel.is_homogeneous:
            return HypothesisStatus.CERTIFIED
        return HypothesisStatus.UNVERIFIED


def map_pd(phi: RingMap) -> PdReport:
    """pd_R(S), which is the flat dimension of φ for these maps."""
    report = cached(phi, ("map-pd",), lambda: pd(phi.target_as_module()))
    logger.info(f"pd of {phi.label()}: {report.value}")
    return report


def is_regular_sequence(ring: QuotientRing, elements) -> bool:
    """Koszul-regular: H_i(K(f)) = 0 for i > 0 and R/(f) != 0."""
    complex_ = koszul(ring, elements)
    if complex_.homology(0).is_zero():
        return False
    return all(complex_.homology(n).is_zero() for n in range(1, complex_.hi + 1))
