"""
Dualizing complexes, semidualizing verdicts and G_C-dimension.
"""

from .dualizing import canonical_module, dualizing_complex
from .enums import Construction, GDimCertificate, Verdict
from .gdim import (
    EvaluationReport,
    dual_into,
    evaluation_checks,
    gdim,
    is_totally_reflexive,
    localized_gdim,
    pair_check,
    reflexivity_swap,
)
from .semidualizing import (
    WINDOW_MARGIN,
    certification,
    certify,
    homothety_vector,
    is_semidualizing,
    is_shifted_ring,
)
from .verdict import GDimReport, SemidualVerdict

__all__ = [
    "Verdict",
    "Construction",
    "GDimCertificate",
    "SemidualVerdict",
    "GDimReport",
    "EvaluationReport",
    "WINDOW_MARGIN",
    "certify",
    "certification",
    "is_shifted_ring",
    "homothety_vector",
    "is_semidualizing",
    "dualizing_complex",
    "canonical_module",
    "gdim",
    "localized_gdim",
    "is_totally_reflexive",
    "dual_into",
    "evaluation_checks",
    "pair_check",
    "reflexivity_swap",
]
