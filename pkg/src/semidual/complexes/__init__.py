"""
Chain-complex algebra: constructions, homology invariants, localized
invariants and fingerprints.
"""

from semidual.extint import ExtInt, ext_max, ext_min

from .fingerprint import (
    FingerprintEntry,
    HomologyFingerprint,
    fingerprint,
    fingerprints_agree,
    localized_agree,
)
from .homology import (
    amp,
    homology,
    homology_summary,
    inf,
    inf_sup_amp,
    is_exact,
    localized_amp,
    localized_degrees,
    localized_inf,
    localized_sup,
    nonzero_degrees,
    sup,
)
from .operations import (
    base_change_complex,
    cone,
    direct_sum,
    hom_complex,
    koszul,
    multiplication,
    shift,
    tensor_complex,
    truncate_above,
    truncate_free,
)
from .serialize import complex_from_dict, complex_to_dict

__all__ = [
    "ExtInt",
    "ext_min",
    "ext_max",
    "FingerprintEntry",
    "HomologyFingerprint",
    "fingerprint",
    "fingerprints_agree",
    "localized_agree",
    "homology",
    "homology_summary",
    "inf",
    "sup",
    "amp",
    "inf_sup_amp",
    "is_exact",
    "nonzero_degrees",
    "localized_degrees",
    "localized_inf",
    "localized_sup",
    "localized_amp",
    "shift",
    "direct_sum",
    "cone",
    "hom_complex",
    "tensor_complex",
    "koszul",
    "multiplication",
    "truncate_above",
    "truncate_free",
    "base_change_complex",
    "complex_to_dict",
    "complex_from_dict",
]
