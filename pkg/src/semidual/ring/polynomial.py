"""
Polynomial rings over a coefficient field with a weighted
degree-reverse-lexicographic order, plus the polynomial text grammar.

Grammar (bit-exact for I/O):
    variables  [A-Za-z][A-Za-z0-9]*
    constants  non-negative integers
    operators  + - * ^ and parentheses; implicit multiplication is rejected
    example    Y^2 + 3*Y*Z
"""

import re
from dataclasses import dataclass
from dataclasses import field as dataclass_field

from sympy.polys.domains.domain import Domain
from sympy.polys.monomials import monomial_divides
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from semidual.errors import RingMismatchError, ScriptParseError
from semidual.logging import setup_logger

from .field import field_descriptor, format_coefficient

logger = setup_logger()

VARIABLE_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\^|\*|\+|-|\(|\)))")


class WeightedRevLexOrder(MonomialOrder):
    """Degree-reverse-lexicographic order where degree is weighted by the grading."""

    alias = "wgrevlex"
    is_global = True
    is_default = False

    def __init__(self, weights: tuple[int, ...]):
        self.weights = tuple(weights)

    def __call__(self, monomial):
        degree = sum(w * e for w, e in zip(self.weights, monomial))
        return (degree, tuple(reversed([-e for e in monomial])))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.weights})"

    def __eq__(self, other):
        return isinstance(other, WeightedRevLexOrder) and other.weights == self.weights

    def __hash__(self):
        return hash((self.__class__.__name__, self.weights))


@dataclass(frozen=True)
class PolyRing:
    """The polynomial cover k[x_1..x_v] with positive integer grading weights."""

    names: tuple[str, ...]
    field: Domain
    weights: tuple[int, ...] = ()
    order_tag: str = "grevlex"
    ring: SympyPolyRing = dataclass_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("A polynomial ring needs at least one variable")
        for name in names:
            if not VARIABLE_PATTERN.fullmatch(name):
                raise ValueError(f"Invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"Variable names must be unique: {names}")

        weights = tuple(self.weights) if self.weights else (1,) * len(names)
        if len(weights) != len(names):
            raise ValueError("One grading weight per variable is required")
        if any(int(w) < 1 for w in weights):
            raise ValueError(f"Grading weights must be positive: {weights}")
        weights = tuple(int(w) for w in weights)

        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(
            self, "ring", SympyPolyRing(list(names), self.field, WeightedRevLexOrder(weights))
        )
        logger.debug(f"Created polynomial ring {self.describe()}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def gens(self) -> tuple[PolyElement, ...]:
        return tuple(self.ring.gens)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def gen(self, name: str) -> PolyElement:
        try:
            return self.ring.gens[self.names.index(name)]
        except ValueError:
            raise ValueError(f"Unknown variable {name!r} in ring {self.describe()}")

    def describe(self) -> str:
        weights = "" if set(self.weights) == {1} else f" weights={list(self.weights)}"
        return f"F_{field_descriptor(self.field)}[{','.join(self.names)}]{weights}"

    def monomial_degree(self, monomial: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.weights, monomial))

    def constant(self, value) -> PolyElement:
        return self.ring(value)

    def from_terms(self, terms: dict) -> PolyElement:
        return self.ring.from_dict(dict(terms))

    def check(self, poly: PolyElement) -> PolyElement:
        """Reject polynomials from another ring."""
        if poly.ring != self.ring:
            raise RingMismatchError(f"Polynomial {poly} is not in {self.describe()}")
        return poly

    # --- grading -----------------------------------------------------------

    def degree(self, poly: PolyElement) -> int | None:
        """Weighted degree of the leading term (None for zero)."""
        if not poly:
            return None
        return self.monomial_degree(poly.LM)

    def is_homogeneous(self, poly: PolyElement) -> bool:
        degrees = {self.monomial_degree(m) for m in poly.itermonoms()}
        return len(degrees) <= 1

    def constant_term(self, poly: PolyElement):
        return poly.get(self.ring.zero_monom, self.field.zero)

    def in_irrelevant_ideal(self, poly: PolyElement) -> bool:
        return not self.constant_term(poly)

    def divides(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return monomial_divides(a, b)

    def monomials_of_degree(self, degree: int) -> list[tuple[int, ...]]:
        """All exponent vectors of the given weighted degree."""
        if degree < 0:
            return []
        found: list[tuple[int, ...]] = []

        def extend(prefix: list[int], index: int, remaining: int):
            if index == self.nvars:
                if remaining == 0:
                    found.append(tuple(prefix))
                return
            w = self.weights[index]
            for e in range(remaining // w + 1):
                prefix.append(e)
                extend(prefix, index + 1, remaining - w * e)
                prefix.pop()

        extend([], 0, degree)
        return found

    # --- text --------------------------------------------------------------

    def parse(self, text: str, line: int | None = None, offset: int = 0) -> PolyElement:
        """Parse a polynomial in the engine's grammar."""
        return _PolyParser(self, text, line, offset).parse()

    def format(self, poly: PolyElement) -> str:
        """Render a polynomial, terms in decreasing monomial order."""
        if not poly:
            return "0"
        pieces: list[str] = []
        for monomial, coeff in poly.terms():
            value = format_coefficient(self.field, coeff)
            negative = value.startswith("-")
            magnitude = value[1:] if negative else value
            factors = []
            for name, exponent in zip(self.names, monomial):
                if exponent == 1:
                    factors.append(name)
                elif exponent > 1:
                    factors.append(f"{name}^{exponent}")
            if not factors:
                body = magnitude
            elif magnitude == "1":
                body = "*".join(factors)
            else:
                body = "*".join([magnitude, *factors])
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def extend(self, names: tuple[str, ...], weights: tuple[int, ...] = ()) -> "PolyRing":
        """A cover with extra variables appended (for module-finite extensions)."""
        extra_weights = tuple(weights) if weights else (1,) * len(names)
        return PolyRing(self.names + tuple(names), self.field, self.weights + extra_weights)

    def embed(self, poly: PolyElement, target: "PolyRing") -> PolyElement:
        """Map a polynomial into a cover extending this one."""
        padding = (0,) * (target.nvars - self.nvars)
        return target.from_terms({m + padding: c for m, c in poly.items()})


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, ring: PolyRing, text: str, line: int | None, offset: int):
        self.ring = ring
        self.text = text
        self.line = line
        self.offset = offset
        self.tokens = self._tokenize()
        self.position = 0

    def _error(self, message: str, column: int) -> ScriptParseError:
        return ScriptParseError(message, line=self.line, column=self.offset + column + 1)

    def _tokenize(self) -> list[tuple[str, str, int]]:
        tokens = []
        index = 0
        stripped_end = len(self.text.rstrip())
        while index < stripped_end:
            match = _TOKEN_PATTERN.match(self.text, index)
            if not match or match.end() == index:
                column = index + (len(self.text[index:]) - len(self.text[index:].lstrip()))
                raise self._error(f"Unexpected character {self.text[column]!r}", column)
            start = match.start(match.lastindex)
            if match.group(1) is not None:
                tokens.append(("int", match.group(1), start))
            elif match.group(2) is not None:
                tokens.append(("var", match.group(2), start))
            else:
                tokens.append(("op", match.group(3), start))
            index = match.end()
        return tokens

    def _peek(self) -> tuple[str, str, int] | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def _next(self) -> tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise self._error("Unexpected end of polynomial", len(self.text))
        self.position += 1
        return token

    def parse(self) -> PolyElement:
        if not self.tokens:
            raise self._error("Empty polynomial", 0)
        value = self._expression()
        token = self._peek()
        if token is not None:
            kind, text, column = token
            if kind in ("var", "int") or text == "(":
                raise self._error("Implicit multiplication is not allowed; use '*'", column)
            raise self._error(f"Unexpected token {text!r}", column)
        return value

    def _expression(self) -> PolyElement:
        value = self._term()
        while True:
            token = self._peek()
            if token is None or token[1] not in ("+", "-"):
                return value
            self._next()
            rhs = self._term()
            value = value + rhs if token[1] == "+" else value - rhs

    def _term(self) -> PolyElement:
        value = self._unary()
        while True:
            token = self._peek()
            if token is None or token[1] != "*":
                return value
            self._next()
            value = value * self._unary()

    def _unary(self) -> PolyElement:
        token = self._peek()
        if token is not None and token[1] in ("+", "-"):
            self._next()
            value = self._unary()
            return -value if token[1] == "-" else value
        return self._power()

    def _power(self) -> PolyElement:
        base = self._atom()
        token = self._peek()
        if token is None or token[1] != "^":
            return base
        self._next()
        kind, text, column = self._next()
        if kind != "int":
            raise self._error("Exponent must be a non-negative integer", column)
        return base ** int(text)

    def _atom(self) -> PolyElement:
        kind, text, column = self._next()
        if kind == "int":
            return self.ring.constant(int(text))
        if kind == "var":
            if text not in self.ring.names:
                raise self._error(f"Unknown variable {text!r}", column)
            return self.ring.gen(text)
        if text == "(":
            value = self._expression()
            closing = self._next()
            if closing[1] != ")":
                raise self._error("Expected ')'", closing[2])
            return value
        raise self._error(f"Unexpected token {text!r}", column)
