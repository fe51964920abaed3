"""
Derived functors with certified windows, depth, and Poincare/Bass series.
"""

from .cover import CoverDual, CoverModel, cover_resolution, ring_over_cover
from .depth import depth
from .enums import WindowKind
from .functors import (
    AB_MARGIN,
    DerivedResult,
    as_complex,
    default_cutoff,
    derived_tensor,
    ext,
    finite_free_replacement,
    free_replacement,
    module_representative,
    rhom,
    tor,
)
from .invariants import bass_series, poincare_series, series_identity
from .series import LaurentPoly
from .window import WindowCertificate

__all__ = [
    "WindowKind",
    "WindowCertificate",
    "LaurentPoly",
    "CoverModel",
    "CoverDual",
    "cover_resolution",
    "ring_over_cover",
    "DerivedResult",
    "as_complex",
    "module_representative",
    "AB_MARGIN",
    "default_cutoff",
    "finite_free_replacement",
    "free_replacement",
    "rhom",
    "derived_tensor",
    "ext",
    "tor",
    "depth",
    "poincare_series",
    "bass_series",
    "series_identity",
]
