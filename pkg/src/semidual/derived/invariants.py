"""
Truncated Poincare and Bass series over graded-local rings.

β_i(X) is the rank of F_i in a minimal free resolution of X, and
μ^i(X) = dim_k Ext^i(k, X). For a cover dualizing complex D the Betti
numbers come from Ext_R(D, k) ≅ Ext_R(RHom_R(k, D), R), whose left argument
has homology in a single degree.
"""

from semidual.errors import UnsupportedRingError
from semidual.logging import setup_logger
from semidual.modules import FPModule, FreeComplex, resolve
from semidual.modules.resolution import is_graded_complex

from .cover import CoverDual, CoverModel
from .functors import as_complex, module_representative, rhom
from .series import LaurentPoly

logger = setup_logger()


def _require_graded_local(ring):
    if not ring.graded_local:
        logger.error(f"Series requested over the non-graded-local ring {ring.describe()}")
        raise UnsupportedRingError("unsupported: use localized invariants")


def _dimensions(result, top: int) -> LaurentPoly:
    """Σ dim_k H_{-i} t^i for -i inside the result's window and i ≤ top."""
    coefficients = {}
    for n in result.indices():
        if -n <= top:
            module = result.homology(n)
            if not module.is_zero():
                coefficients[-n] = module.minimal_generator_count()
    return LaurentPoly.from_dict(coefficients, top)


def poincare_series(source, cutoff: int) -> LaurentPoly:
    """Σ β_i t^i through t^cutoff."""
    complex_ = as_complex(source)
    ring = complex_.ring
    _require_graded_local(ring)

    if isinstance(complex_, CoverDual):
        residue = rhom(FPModule.residue_field(ring), complex_).complex.representative()
        result = rhom(residue, FreeComplex.ring_complex(ring), cutoff + 1)
        return _dimensions(result, cutoff)

    representative = module_representative(complex_)
    if representative is None or not is_graded_complex(representative):
        raise UnsupportedRingError(f"Betti numbers of {complex_.label()} need a graded model")
    resolution = resolve(representative, cutoff)
    free = resolution.complex
    coefficients = {n: free.rank(n) for n in free.indices() if n <= cutoff}
    top = None if resolution.terminated else cutoff
    return LaurentPoly.from_dict(coefficients, top)


def bass_series(source, cutoff: int) -> LaurentPoly:
    """Σ μ^i t^i through t^cutoff, from a truncated resolution of k."""
    complex_ = as_complex(source)
    ring = complex_.ring
    _require_graded_local(ring)
    residue = FPModule.residue_field(ring)
    if isinstance(complex_, CoverModel):
        result = rhom(residue, complex_)
    else:
        result = rhom(residue, complex_, max(complex_.hi, 0) + cutoff + 1)
    return _dimensions(result, cutoff)


def series_identity(semidualizing, cutoff: int) -> tuple[LaurentPoly, LaurentPoly, bool]:
    """P^R_C(t) I_R^C(t) against I_R^R(t), coefficientwise to t^cutoff."""
    complex_ = as_complex(semidualizing)
    ring = complex_.ring
    product = poincare_series(complex_, cutoff) * bass_series(complex_, cutoff)
    ring_series = bass_series(FreeComplex.ring_complex(ring), cutoff)
    holds = product.agrees(ring_series, cutoff)
    if not holds:
        logger.warning(f"P·I identity fails for {complex_.label()}: {product} vs {ring_series}")
    return product, ring_series, holds
