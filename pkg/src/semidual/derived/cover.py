"""
Complexes known through the regular cover.

For R = P/I the complexes RHom_P(-, P) are computed by finite free
resolutions over the polynomial ring P. Their homology modules are killed by
I, so they are R-modules, and RHom_R(X, Σ^s RHom_P(R, P)) ≅ Σ^s RHom_P(X, P)
makes Σ^s RHom_P(R, P) a dualizing complex for R that never needs an
R-free resolution.
"""

from semidual.errors import RingMismatchError, VerificationError
from semidual.logging import setup_logger
from semidual.memo import cached, memoized
from semidual.modules import FPModule, FreeComplex, HomologicalObject, ModuleComplex, resolve
from semidual.ring import QuotientRing

logger = setup_logger()


def cover_resolution(source) -> FreeComplex:
    """The finite free resolution of a module or complex over the cover ring."""
    complex_ = source if isinstance(source, ModuleComplex) else ModuleComplex.concentrated(source)
    if not complex_.ring.is_cover:
        raise RingMismatchError(f"{complex_.label()} is not a complex over a polynomial ring")
    cutoff = complex_.hi + complex_.ring.nvars + 1
    resolution = resolve(complex_, cutoff)
    if not resolution.terminated:
        logger.error(f"Resolution of {complex_.label()} over the cover did not terminate")
        raise VerificationError(
            f"Resolution of {complex_.label()} over {complex_.ring.describe()} "
            f"did not terminate by degree {cutoff}"
        )
    return resolution.complex


def ring_over_cover(ring: QuotientRing) -> FPModule:
    """R = P/I as a cyclic P-module."""
    return FPModule.cyclic(ring.cover_ring(), ring.ideal.basis, name=ring.name or "R")


class CoverModel(HomologicalObject):
    """
    An R-complex represented by a complex over the cover with the same
    homology. `dual_source = (C', D)` records that the model is RHom_R(C', D)
    for a cover dualizing complex D.
    """

    def __init__(
        self,
        ring: QuotientRing,
        cover_complex: ModuleComplex,
        name: str = "",
        dual_source: tuple | None = None,
    ):
        if cover_complex.ring != ring.cover_ring():
            raise RingMismatchError(f"Cover model for {ring.describe()} built over another ring")
        self._ring = ring
        self.cover_complex = cover_complex
        self.name = name
        self.dual_source = dual_source

    @property
    def ring(self) -> QuotientRing:
        return self._ring

    @property
    def lo(self) -> int:
        return self.cover_complex.lo

    @property
    def hi(self) -> int:
        return self.cover_complex.hi

    def over_cover(self) -> ModuleComplex:
        return self.cover_complex

    def label(self) -> str:
        return self.name or f"cover-model[{self.lo}..{self.hi}]"

    @memoized
    def homology(self, n: int) -> FPModule:
        """H_n over P, re-presented over R."""
        module = self.cover_complex.homology(n)
        return FPModule(self.ring, module.twists, module.relations, f"H_{n}({self.label()})")

    def shift(self, k: int) -> "CoverModel":
        source = None
        if self.dual_source is not None:
            inner, dual = self.dual_source
            source = (inner, dual.shift(k))
        name = f"Σ^{k}{self.label()}" if k else self.name
        return CoverModel(self.ring, self.cover_complex.shift(k), name, source)

    def representative(self) -> ModuleComplex | None:
        """
        An R-module complex quasi-isomorphic to the model, available when the
        homology sits in a single degree.
        """
        degrees = [n for n in self.indices() if not self.homology(n).is_zero()]
        if not degrees:
            return ModuleComplex(self.ring, {}, {}, self.label(), check=False)
        if len(degrees) > 1:
            return None
        n = degrees[0]
        return ModuleComplex.concentrated(self.homology(n).pruned(), n, self.label())


class CoverDual(CoverModel):
    """Σ^offset Hom_P(F, P) for the minimal free resolution F of R over P."""

    def __init__(self, ring: QuotientRing, offset: int, name: str = "D"):
        resolution = cached(
            ring, ("cover-resolution",), lambda: cover_resolution(ring_over_cover(ring))
        )
        super().__init__(ring, resolution.dual().shift(offset), name)
        self.offset = offset
        self.resolution = resolution

    def shift(self, k: int) -> "CoverDual":
        name = f"Σ^{k}{self.name}" if k else self.name
        return CoverDual(self.ring, self.offset + k, name)

    def describe(self) -> str:
        return f"{self.label()} = Σ^{self.offset} Hom_P(F, P), F ranks {self.resolution.ranks()}"
