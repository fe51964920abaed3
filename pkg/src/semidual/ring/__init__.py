"""
Ring layer: coefficient fields, the polynomial cover, Groebner bases, ideals
and quotient rings.
"""

from .field import DEFAULT_CHARACTERISTIC, field_descriptor, format_coefficient, make_field
from .groebner import Elimination, ModuleGroebner, ModuleOrder
from .ideal import (
    Ideal,
    Localization,
    PrimeIdeal,
    QuotientRing,
    groebner,
    ideal_contains,
    normal_form,
)
from .polynomial import PolyRing, WeightedRevLexOrder

__all__ = [
    "DEFAULT_CHARACTERISTIC",
    "make_field",
    "field_descriptor",
    "format_coefficient",
    "PolyRing",
    "WeightedRevLexOrder",
    "ModuleOrder",
    "ModuleGroebner",
    "Elimination",
    "Ideal",
    "QuotientRing",
    "PrimeIdeal",
    "Localization",
    "groebner",
    "normal_form",
    "ideal_contains",
]
