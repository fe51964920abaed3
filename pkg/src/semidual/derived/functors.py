"""
Derived functors with certified windows.

Every result is a DerivedResult: a complex whose homology is claimed only in
the degrees its WindowCertificate covers. Inputs with a finite free
resolution give exact results; otherwise a truncated resolution is used and
the window records where truncation cannot be seen.

RHom into a cover dualizing complex always goes through the cover, where
resolutions are finite.
"""

from semidual.complexes import (
    hom_complex,
    inf,
    sup,
    tensor_complex,
    truncate_free,
)
from semidual.errors import RingMismatchError, UnsupportedRingError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.modules import FPModule, FreeComplex, HomologicalObject, ModuleComplex, resolve

from .cover import CoverDual, CoverModel, cover_resolution
from .depth import depth
from .enums import WindowKind
from .window import WindowCertificate

logger = setup_logger()

AB_MARGIN = 4


class DerivedResult(HomologicalObject):
    """A derived-functor value restricted to the degrees its certificate covers."""

    def __init__(self, complex_: HomologicalObject, certificate: WindowCertificate, name: str = ""):
        self.complex = complex_
        self.certificate = certificate
        self.name = name

    @property
    def ring(self):
        return self.complex.ring

    @property
    def lo(self) -> int:
        lo = self.complex.lo
        if self.certificate.above.is_finite:
            lo = max(lo, self.certificate.above.value + 1)
        return lo

    @property
    def hi(self) -> int:
        hi = self.complex.hi
        if self.certificate.below.is_finite:
            hi = min(hi, self.certificate.below.value - 1)
        return hi

    def homology(self, n: int) -> FPModule:
        if not self.certificate.covers(n):
            raise ValueError(f"Degree {n} lies outside the window {self.certificate}")
        return self.complex.homology(n)

    def over_cover(self) -> ModuleComplex:
        if not self.is_exact:
            raise UnsupportedRingError(f"{self.label()} is only known on a window")
        return self.complex.over_cover()

    def label(self) -> str:
        return self.name or self.complex.label()

    @property
    def is_exact(self) -> bool:
        return self.certificate.is_exact


def as_complex(source) -> HomologicalObject:
    if isinstance(source, FPModule):
        return ModuleComplex.concentrated(source)
    if isinstance(source, DerivedResult):
        if not source.is_exact:
            raise UnsupportedRingError(f"{source.label()} is only known on a window")
        return as_complex(source.complex)
    return source


def module_representative(source) -> ModuleComplex | None:
    """An R-module complex for the source, when one is available."""
    complex_ = as_complex(source)
    if isinstance(complex_, CoverModel):
        return complex_.representative()
    return complex_


def _check_rings(first, second):
    if first.ring != second.ring:
        raise RingMismatchError(
            f"Derived functor of objects over {first.ring.describe()} and {second.ring.describe()}"
        )


def finite_free_replacement(source) -> FreeComplex | None:
    """A finite free complex quasi-isomorphic to the source, or None if pd looks infinite."""
    complex_ = module_representative(source)
    if complex_ is None:
        return None
    if complex_.is_free:
        return FreeComplex.from_module_complex(complex_)
    cutoff = complex_.hi + complex_.ring.nvars + 1
    resolution = resolve(complex_, cutoff)
    return resolution.complex if resolution.terminated else None


def free_replacement(
    source, cutoff: int, kind: WindowKind = WindowKind.AB_WINDOW
) -> tuple[FreeComplex, WindowCertificate]:
    """
    A free complex F with F ≃ X in every degree below `cutoff`. A resolution
    that terminates is exact and certified `finite-pd`.
    """
    complex_ = module_representative(source)
    if complex_ is None:
        raise UnsupportedRingError(
            f"No R-module representative for {as_complex(source).label()}; "
            "its free replacement is not computed"
        )
    if complex_.is_free:
        return FreeComplex.from_module_complex(complex_), WindowCertificate.exact()
    resolution = resolve(complex_, cutoff)
    if resolution.terminated:
        return resolution.complex, WindowCertificate.exact()
    free = truncate_free(resolution.complex, resolution.complex.lo, cutoff)
    logger.debug(f"Free replacement of {complex_.label()} truncated at {cutoff}")
    return free, WindowCertificate(kind, cutoff, below=ExtInt(cutoff))


def _finite_bounds(complex_: HomologicalObject) -> tuple[int, int]:
    low, high = inf(complex_), sup(complex_)
    if not low.is_finite:
        return 0, 0
    return low.value, high.value


def default_cutoff(source, target) -> tuple[int, WindowKind]:
    """
    depth R + amp(C) + sup X - inf X + 4 resolution steps past inf X. Outside
    graded-local rings the number of variables stands in for depth R and the
    window is tagged `user`.
    """
    ring = target.ring
    if ring.graded_local:
        base = depth(ring)
        base = base.value if base.is_finite else ring.nvars
        kind = WindowKind.AB_WINDOW
    else:
        base, kind = ring.nvars, WindowKind.USER
    x_low, x_high = _finite_bounds(as_complex(source))
    c_low, c_high = _finite_bounds(as_complex(target))
    steps = base + (c_high - c_low) + (x_high - x_low) + AB_MARGIN
    return x_low + steps, kind


def _rhom_into_dual(source, dual: CoverModel, name: str) -> DerivedResult:
    """RHom_R(X, Σ^s RHom_P(R, P)) = Σ^s Hom_P(G, P) for a P-free resolution G of X."""
    complex_ = as_complex(source)
    _check_rings(complex_, dual)
    resolution = cover_resolution(complex_.over_cover())
    model = CoverModel(dual.ring, resolution.dual().shift(dual.offset), name, (complex_, dual))
    return DerivedResult(model, WindowCertificate.exact(), name)


def rhom(source, target, cutoff: int | None = None) -> DerivedResult:
    """RHom_R(X, Y); Ext^i_R(X, Y) = H_{-i} inside the window."""
    name = f"RHom({as_complex(source).label()}, {as_complex(target).label()})"
    target_complex = as_complex(target)
    _check_rings(as_complex(source), target_complex)

    if isinstance(target_complex, CoverDual):
        return _rhom_into_dual(source, target_complex, name)
    if isinstance(target_complex, CoverModel):
        if target_complex.dual_source is not None:
            inner, dual = target_complex.dual_source
            tensor = derived_tensor(source, inner)
            if not tensor.is_exact:
                raise UnsupportedRingError(f"{name} needs an exact {tensor.label()}")
            return _rhom_into_dual(tensor.complex, dual, name)
        representative = target_complex.representative()
        if representative is None:
            raise UnsupportedRingError(f"{name}: target has no R-module representative")
        target_complex = representative

    if cutoff is None:
        cutoff, kind = default_cutoff(source, target_complex)
    else:
        kind = WindowKind.USER
    free, certificate = free_replacement(source, cutoff, kind)
    result = hom_complex(free, target_complex)
    if not certificate.is_exact:
        certificate = WindowCertificate(kind, cutoff, above=ExtInt(target_complex.hi - cutoff))
    logger.debug(f"{name}: {certificate}")
    return DerivedResult(result, certificate, name)


def _tensor_with_model(model: CoverModel, other, name: str) -> DerivedResult:
    """C ⊗^L Y ≅ RHom(Hom(F, R), C) for a finite free resolution F of Y."""
    free = finite_free_replacement(other)
    if free is None:
        raise UnsupportedRingError(f"{name}: needs finite projective dimension on one side")
    result = rhom(free.dual(), model)
    return DerivedResult(result.complex, result.certificate, name)


def derived_tensor(first, second, cutoff: int | None = None) -> DerivedResult:
    """X ⊗^L Y; Tor_i = H_i inside the window."""
    left, right = as_complex(first), as_complex(second)
    _check_rings(left, right)
    name = f"{left.label()} ⊗^L {right.label()}"

    for model, other in ((left, second), (right, first)):
        if isinstance(model, CoverModel) and module_representative(model) is None:
            return _tensor_with_model(model, other, name)

    left_module, right_module = module_representative(left), module_representative(right)
    for free_side, other in ((first, right_module), (second, left_module)):
        free = finite_free_replacement(free_side)
        if free is not None:
            return DerivedResult(tensor_complex(free, other), WindowCertificate.exact(), name)

    if cutoff is None:
        cutoff, kind = default_cutoff(first, second)
    else:
        kind = WindowKind.USER
    free, certificate = free_replacement(first, cutoff, kind)
    result = tensor_complex(free, right_module)
    if not certificate.is_exact:
        certificate = WindowCertificate(kind, cutoff, below=ExtInt(cutoff + right_module.lo))
    logger.debug(f"{name}: {certificate}")
    return DerivedResult(result, certificate, name)


def ext(source, target, i: int) -> FPModule:
    """Ext^i_R(X, Y), with a cutoff that puts degree -i inside the window."""
    target_complex = as_complex(target)
    cutoff = target_complex.hi + i + 1
    return rhom(source, target, max(cutoff, 0)).homology(-i)


def tor(first, second, i: int) -> FPModule:
    """Tor_i^R(X, Y)."""
    cutoff = i - as_complex(second).lo + 1
    return derived_tensor(first, second, max(cutoff, 0)).homology(i)
