"""
Modules layer: matrices, finitely presented modules, complexes and free
resolutions.
"""

from .complex import ChainMap, FreeComplex, HomologicalObject, ModuleComplex, subquotient
from .enums import PdCertificate
from .matrix import Matrix, PolyVector
from .module import FPModule, HomModule
from .resolution import (
    PdReport,
    Resolution,
    betti_numbers,
    graded_betti_numbers,
    minimal_free_resolution,
    pd,
    resolve,
    syzygies,
)
from .submodule import Membership, SubmoduleEngine, kernel, select_generators

__all__ = [
    "Matrix",
    "PolyVector",
    "FPModule",
    "HomModule",
    "HomologicalObject",
    "ModuleComplex",
    "FreeComplex",
    "ChainMap",
    "subquotient",
    "PdCertificate",
    "PdReport",
    "Resolution",
    "resolve",
    "syzygies",
    "minimal_free_resolution",
    "pd",
    "betti_numbers",
    "graded_betti_numbers",
    "Membership",
    "SubmoduleEngine",
    "kernel",
    "select_generators",
]
