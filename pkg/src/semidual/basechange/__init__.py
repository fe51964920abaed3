"""
Ring maps and the transfer of semidualizing complexes and G-dimensions
along them.
"""

from .enums import DescentKind, HypothesisStatus, MapKind
from .grade import GradeEntry, GradeProfile, ext_concentration, fitting_ideal, grade_profile
from .ringmap import RingMap, is_regular_sequence, map_pd
from .transfer import (
    DescentReport,
    SeriesTransfer,
    TransferResult,
    UniquenessReport,
    amplitude_check,
    base_change,
    cone_tensor_check,
    cobase_change,
    descent_gdim,
    effective_status,
    projective_dimension,
    series_transfer,
    tensor_gdim_bounds,
    transfer_uniqueness,
)

__all__ = [
    "MapKind",
    "HypothesisStatus",
    "DescentKind",
    "RingMap",
    "map_pd",
    "is_regular_sequence",
    "GradeEntry",
    "GradeProfile",
    "fitting_ideal",
    "grade_profile",
    "ext_concentration",
    "TransferResult",
    "base_change",
    "cobase_change",
    "DescentReport",
    "descent_gdim",
    "SeriesTransfer",
    "series_transfer",
    "UniquenessReport",
    "transfer_uniqueness",
    "effective_status",
    "projective_dimension",
    "amplitude_check",
    "cone_tensor_check",
    "tensor_gdim_bounds",
]
