"""
Coefficient fields: prime fields F_p (odd p < 2^31) and the rationals.

Field elements are sympy domain elements, so arithmetic is exact and
division by zero raises.
"""

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from semidual.logging import setup_logger

logger = setup_logger()

DEFAULT_CHARACTERISTIC = 32003
MAX_CHARACTERISTIC = 2**31


def make_field(spec: int | str | None = None) -> Domain:
    """
    Build a coefficient field from a descriptor.

    Args:
        spec: an odd prime, its decimal string, or "Q"/"QQ" for the rationals.
              None selects F_32003.

    Returns:
        The sympy domain
    """
    if spec is None:
        spec = DEFAULT_CHARACTERISTIC

    if isinstance(spec, str):
        text = spec.strip()
        if text.upper() in ("Q", "QQ"):
            logger.warning("Rational coefficients selected: expect coefficient growth")
            return QQ
        try:
            spec = int(text)
        except ValueError:
            logger.error(f"Invalid field descriptor: {text!r}")
            raise ValueError(f"Invalid field descriptor: {text!r} (expected a prime or Q)")

    p = int(spec)
    if p == 2:
        raise ValueError("Characteristic 2 is not supported")
    if p < 3 or p >= MAX_CHARACTERISTIC or not isprime(p):
        logger.error(f"Field characteristic must be an odd prime below 2^31, got {p}")
        raise ValueError(f"Field characteristic must be an odd prime below 2^31, got {p}")
    return GF(p)


def field_descriptor(field: Domain) -> str:
    """The descriptor make_field() accepts for this field."""
    if field.is_FiniteField:
        return str(field.mod)
    return "Q"


def format_coefficient(field: Domain, value) -> str:
    """Integer (symmetric residue) or reduced fraction text for a field element."""
    if field.is_FiniteField:
        return str(field.to_int(value))
    return str(field.to_sympy(value))


def divide(field: Domain, a, b):
    """Exact quotient a / b; dividing by zero is rejected."""
    if not b:
        raise ZeroDivisionError("division by zero in the coefficient field")
    return field.quo(a, b)
