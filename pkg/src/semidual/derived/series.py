"""
Truncated Laurent polynomials for Poincare and Bass series.

A series is stored sparsely together with `top`, the largest exponent whose
coefficient is known; `top = None` means the series is exact.
"""

from dataclasses import dataclass

from semidual.logging import setup_logger

logger = setup_logger()


@dataclass(frozen=True)
class LaurentPoly:
    """Σ c_e t^e with integer coefficients, known for exponents ≤ top."""

    terms: tuple[tuple[int, int], ...] = ()
    top: int | None = None

    def __post_init__(self):
        merged: dict[int, int] = {}
        for exponent, coeff in self.terms:
            merged[int(exponent)] = merged.get(int(exponent), 0) + int(coeff)
        terms = tuple(
            (e, c)
            for e, c in sorted(merged.items())
            if c and (self.top is None or e <= self.top)
        )
        object.__setattr__(self, "terms", terms)

    # --- construction ------------------------------------------------------

    @classmethod
    def from_dict(cls, coefficients: dict[int, int], top: int | None = None) -> "LaurentPoly":
        return cls(tuple(coefficients.items()), top)

    @classmethod
    def from_list(cls, values, start: int = 0, top: int | None = None) -> "LaurentPoly":
        """Coefficients of t^start, t^(start+1), ..."""
        return cls(tuple((start + i, v) for i, v in enumerate(values)), top)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exponent, coeff),))

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(0)

    # --- queries -----------------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        if self.top is not None and exponent > self.top:
            raise ValueError(f"Coefficient of t^{exponent} lies beyond the truncation t^{self.top}")
        return dict(self.terms).get(exponent, 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    @property
    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def _floor(self) -> int | None:
        """A lower bound for the exponents of the true series (None: exactly zero)."""
        if self.terms:
            return self.terms[0][0]
        return None if self.top is None else self.top + 1

    # --- arithmetic --------------------------------------------------------

    def truncate(self, top: int) -> "LaurentPoly":
        bound = top if self.top is None else min(top, self.top)
        return LaurentPoly(self.terms, bound)

    def shifted(self, k: int) -> "LaurentPoly":
        """t^k times the series."""
        top = None if self.top is None else self.top + k
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms), top)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        tops = [t for t in (self.top, other.top) if t is not None]
        return LaurentPoly(self.terms + other.terms, min(tops) if tops else None)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        floors = (self._floor(), other._floor())
        if None in floors:
            return LaurentPoly((), None)
        bounds = []
        if self.top is not None:
            bounds.append(self.top + floors[1])
        if other.top is not None:
            bounds.append(other.top + floors[0])
        product = [(a + b, x * y) for a, x in self.terms for b, y in other.terms]
        return LaurentPoly(tuple(product), min(bounds) if bounds else None)

    def quotient(self, divisor: "LaurentPoly", top: int | None = None) -> "LaurentPoly":
        """
        The series q with self = divisor * q, as far as both truncations allow.
        The lowest coefficient of the divisor must divide every step exactly.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("Division by the zero series")
        lb = divisor.low
        lead = divisor.coefficient(lb)
        la = self._floor()
        if la is None:
            return LaurentPoly((), None)
        q_low = la - lb
        bounds = [b for b in (top,) if b is not None]
        if self.top is not None:
            bounds.append(self.top - lb)
        if divisor.top is not None:
            bounds.append(divisor.top - lb + q_low)
        if not bounds:
            raise ValueError("The quotient of two exact series needs a truncation degree")
        q_top = min(bounds)
        quotient: dict[int, int] = {}
        for e in range(q_low, q_top + 1):
            value = self.coefficient(e + lb) - sum(
                c * divisor.coefficient(e - k + lb) for k, c in quotient.items()
            )
            if value % lead:
                logger.error(f"Series quotient is not integral at t^{e}")
                raise ValueError(f"Series quotient is not integral at t^{e}")
            if value:
                quotient[e] = value // lead
        return LaurentPoly.from_dict(quotient, q_top)

    def agrees(self, other: "LaurentPoly", top: int | None = None) -> bool:
        """Coefficientwise equality on the common known window."""
        bounds = [t for t in (top, self.top, other.top) if t is not None]
        bound = min(bounds) if bounds else None
        left = {e: c for e, c in self.terms if bound is None or e <= bound}
        right = {e: c for e, c in other.terms if bound is None or e <= bound}
        return left == right

    # --- output ------------------------------------------------------------

    def to_list(self) -> list[str]:
        """Sparse `coeff*t^e` entries in ascending exponent order."""
        return [f"{c}*t^{e}" for e, c in self.terms]

    def to_dict(self) -> dict:
        return {"terms": self.to_list(), "top": self.top}

    def __str__(self):
        body = " + ".join(self.to_list()) or "0"
        return body if self.top is None else f"{body} + O(t^{self.top + 1})"
