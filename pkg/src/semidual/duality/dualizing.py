"""
Dualizing complexes through the regular cover.
"""

from semidual.derived import CoverDual, depth
from semidual.errors import UnsupportedRingError
from semidual.logging import setup_logger
from semidual.ring import QuotientRing

from .enums import Construction
from .semidualizing import certify

logger = setup_logger()


def dualizing_complex(
    ring: QuotientRing, normalize: bool = True, shift: int | None = None
) -> CoverDual:
    """
    D = Σ^s Hom_P(F, P) for the minimal P-free resolution F of R.

    An explicit `shift` wins. Otherwise a normalized D has inf(D) = depth(R),
    which needs a graded-local ring; without normalization s is the number of
    cover variables.
    """
    if shift is None and normalize:
        if not ring.graded_local:
            logger.error(f"Cannot normalize a dualizing complex over {ring.describe()}")
            raise UnsupportedRingError("unsupported: use localized invariants")
        base = CoverDual(ring, 0)
        lowest = min(n for n in base.indices() if not base.homology(n).is_zero())
        shift = depth(ring).value - lowest
    elif shift is None:
        shift = ring.nvars
    dual = CoverDual(ring, shift, "D")
    logger.info(f"Dualizing complex {dual.describe()}")
    return certify(dual, Construction.COVER_DUALIZING)


def canonical_module(ring: QuotientRing):
    """H_{depth R}(D) for a Cohen-Macaulay graded-local ring (amp D = 0), else None."""
    dual = dualizing_complex(ring)
    degrees = [n for n in dual.indices() if not dual.homology(n).is_zero()]
    if len(degrees) != 1:
        return None
    return dual.homology(degrees[0]).pruned()
