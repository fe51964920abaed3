"""
Extended integers: Z together with +inf and -inf.

inf of the zero complex is +inf and sup is -inf, so amplitudes of zero
complexes come out as -inf.
"""

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class ExtInt:
    """An integer, +inf or -inf."""

    value: int = 0
    infinity: int = 0  # +1 for +inf, -1 for -inf, 0 for finite

    @classmethod
    def of(cls, value) -> "ExtInt":
        if isinstance(value, ExtInt):
            return value
        return cls(int(value))

    @classmethod
    def pos_inf(cls) -> "ExtInt":
        return cls(0, 1)

    @classmethod
    def neg_inf(cls) -> "ExtInt":
        return cls(0, -1)

    @classmethod
    def parse(cls, text) -> "ExtInt":
        if isinstance(text, int):
            return cls(text)
        text = str(text).strip().lower()
        if text in ("inf", "+inf", "infinity", "∞", "+∞"):
            return cls.pos_inf()
        if text in ("-inf", "-infinity", "-∞"):
            return cls.neg_inf()
        return cls(int(text))

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def _rank(self):
        return (self.infinity, self.value if self.infinity == 0 else 0)

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._rank() < other._rank()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._rank() == other._rank()

    def __hash__(self):
        return hash(self._rank())

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.infinity and other.infinity and self.infinity != other.infinity:
            raise ArithmeticError("inf - inf is undefined")
        if self.infinity or other.infinity:
            return ExtInt(0, self.infinity or other.infinity)
        return ExtInt(self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return ExtInt(-self.value if self.is_finite else 0, -self.infinity)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __int__(self):
        if not self.is_finite:
            raise OverflowError(f"{self} has no integer value")
        return self.value

    def to_json(self):
        """Integers stay integers; infinities become the strings "inf" and "-inf"."""
        if self.is_finite:
            return self.value
        return "inf" if self.infinity > 0 else "-inf"

    def __str__(self):
        if self.is_finite:
            return str(self.value)
        return "∞" if self.infinity > 0 else "-∞"

    def __repr__(self):
        return f"ExtInt({self})"


def _coerce(value):
    if isinstance(value, ExtInt):
        return value
    if isinstance(value, int):
        return ExtInt(value)
    return NotImplemented


def ext_min(values) -> ExtInt:
    """Minimum of an iterable of ExtInts; +inf for an empty iterable."""
    result = ExtInt.pos_inf()
    for v in values:
        result = min(result, ExtInt.of(v))
    return result


def ext_max(values) -> ExtInt:
    """Maximum of an iterable of ExtInts; -inf for an empty iterable."""
    result = ExtInt.neg_inf()
    for v in values:
        result = max(result, ExtInt.of(v))
    return result
