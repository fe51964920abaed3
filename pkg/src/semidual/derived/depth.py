"""
Depth through Koszul homology: depth_R(X) = v - sup(K(x_1, ..., x_v) ⊗ X)
for the images of the cover variables.
"""

from semidual.complexes import koszul, sup, tensor_complex
from semidual.errors import UnsupportedRingError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.memo import cached
from semidual.modules import FPModule, FreeComplex, HomologicalObject, ModuleComplex
from semidual.ring import QuotientRing

logger = setup_logger()


def _koszul_depth(complex_: ModuleComplex) -> ExtInt:
    ring = complex_.ring
    k = koszul(ring, ring.cover.gens)
    return ring.nvars - sup(tensor_complex(k, complex_))


def depth(source: QuotientRing | FPModule | HomologicalObject) -> ExtInt:
    """Depth of R, of a module or of a complex; +∞ for an exact complex."""
    if isinstance(source, QuotientRing):
        ring = source
        complex_ = FreeComplex.ring_complex(ring)
    elif isinstance(source, FPModule):
        ring = source.ring
        complex_ = ModuleComplex.concentrated(source)
    elif isinstance(source, ModuleComplex):
        ring, complex_ = source.ring, source
    else:
        ring, complex_ = source.ring, source.over_cover()
    if not ring.graded_local:
        logger.error(f"depth requested over the non-graded-local ring {ring.describe()}")
        raise UnsupportedRingError("unsupported: use localized invariants")
    value = cached(source, ("depth",), lambda: _koszul_depth(complex_))
    logger.debug(f"depth of {complex_.label()} = {value}")
    return value
