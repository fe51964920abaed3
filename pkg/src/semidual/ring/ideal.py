"""
Ideals of the cover ring, quotient rings R = P/I, declared primes and the
semilocal model used for localized invariants.
"""

from dataclasses import dataclass
from dataclasses import field as dataclass_field

from sympy.polys.groebnertools import groebner as sympy_groebner
from sympy.polys.rings import PolyElement

from semidual.errors import RingMismatchError
from semidual.logging import setup_logger

from .groebner import Elimination
from .polynomial import PolyRing

logger = setup_logger()


def groebner(ring: PolyRing, generators) -> tuple[PolyElement, ...]:
    """The reduced Groebner basis of the ideal generated by `generators`."""
    nonzero = [ring.check(g) for g in generators if g]
    if not nonzero:
        return ()
    basis = sympy_groebner(nonzero, ring.ring, method="buchberger")
    return tuple(basis)


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal of the cover ring with its eagerly computed reduced Groebner basis."""

    ring: PolyRing
    generators: tuple[PolyElement, ...]
    basis: tuple[PolyElement, ...] = dataclass_field(init=False, repr=False)

    def __post_init__(self):
        generators = tuple(self.ring.check(g) for g in self.generators)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "basis", groebner(self.ring, generators))
        logger.debug(f"Ideal with {len(generators)} generators, basis size {len(self.basis)}")

    @classmethod
    def parse(cls, ring: PolyRing, texts: list[str]) -> "Ideal":
        return cls(ring, tuple(ring.parse(t) for t in texts))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def irrelevant(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.basis))

    def _check_same_ring(self, other: "Ideal"):
        if other.ring != self.ring:
            raise RingMismatchError(
                f"Ideals live in different rings: {self.ring.describe()} vs {other.ring.describe()}"
            )

    def normal_form(self, poly: PolyElement) -> PolyElement:
        """Canonical representative of `poly` modulo the ideal."""
        self.ring.check(poly)
        if not self.basis or not poly:
            return poly
        return poly.rem(list(self.basis))

    def contains(self, poly: PolyElement) -> bool:
        return not self.normal_form(poly)

    def contains_ideal(self, other: "Ideal") -> bool:
        """True when every generator of `other` lies in this ideal."""
        self._check_same_ring(other)
        return all(self.contains(g) for g in other.generators)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_unit(self) -> bool:
        return any(g.is_ground for g in self.basis)

    @property
    def is_homogeneous(self) -> bool:
        return all(self.ring.is_homogeneous(g) for g in self.basis)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.LM for g in self.basis]

    def krull_dim(self) -> int:
        """
        Krull dimension of P/I from the leading-term ideal: the largest set of
        variables containing the support of no leading monomial. The unit
        ideal has dimension -1.
        """
        if self.is_unit:
            return -1
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in self.leading_monomials()]
        best = 0
        n = self.ring.nvars

        def search(index: int, chosen: frozenset):
            nonlocal best
            if len(chosen) + (n - index) <= best:
                return
            if index == n:
                best = max(best, len(chosen))
                return
            extended = chosen | {index}
            if not any(s <= extended for s in supports):
                search(index + 1, extended)
            search(index + 1, chosen)

        search(0, frozenset())
        return best

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_same_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def extend(self, extra) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))

    def _elimination(self, columns: list[PolyElement], relations) -> Elimination:
        field = self.ring.field
        degrees = [self.ring.degree(c) or 0 for c in columns]
        return Elimination(
            field,
            self.ring.weights,
            (0,),
            tuple(degrees),
            [{(0, m): c for m, c in column.items()} for column in columns],
            [{(0, m): c for m, c in r.items()} for r in relations],
            [],
        )

    def colon_element(self, poly: PolyElement) -> "Ideal":
        """I : f, the annihilator of f in P/I."""
        self.ring.check(poly)
        engine = self._elimination([poly], self.basis)
        quotients = [
            self.ring.from_terms({m: c for (_, m), c in v.items()}) for v in engine.kernel()
        ]
        return Ideal(self.ring, tuple(quotients))

    def colon(self, other: "Ideal") -> "Ideal":
        """I : J as the intersection of I : g over generators g of J."""
        self._check_same_ring(other)
        result = Ideal(self.ring, (self.ring.one,))
        for g in other.generators:
            result = result.intersect(self.colon_element(g))
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J as the kernel of P -> P/I ⊕ P/J, 1 -> (1, 1)."""
        self._check_same_ring(other)
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        field = self.ring.field
        zero = (0,) * self.ring.nvars
        column = {(0, zero): field.one, (1, zero): field.one}
        relations = [{(0, m): c for m, c in g.items()} for g in self.basis]
        relations += [{(1, m): c for m, c in g.items()} for g in other.basis]
        engine = Elimination(field, self.ring.weights, (0, 0), (0,), [column], relations, [])
        kernel = [self.ring.from_terms({m: c for (_, m), c in v.items()}) for v in engine.kernel()]
        return Ideal(self.ring, tuple(kernel))

    def format(self) -> str:
        return "(" + ", ".join(self.ring.format(g) for g in self.generators) + ")"

    def basis_text(self) -> str:
        """The reduced Groebner basis as text; equal ideals give equal strings."""
        return "(" + ", ".join(self.ring.format(g) for g in self.basis) + ")"


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """R = P/I over the cover P."""

    cover: PolyRing
    ideal: Ideal
    name: str = ""

    def __post_init__(self):
        if self.ideal.ring != self.cover:
            raise RingMismatchError("Defining ideal must live in the cover ring")
        if self.ideal.is_unit:
            logger.warning(f"Ring {self.describe()} is the zero ring")

    @classmethod
    def polynomial(cls, cover: PolyRing, name: str = "") -> "QuotientRing":
        return cls(cover, Ideal.zero(cover), name)

    @classmethod
    def from_text(cls, cover: PolyRing, relations: list[str], name: str = "") -> "QuotientRing":
        return cls(cover, Ideal.parse(cover, relations), name)

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.cover == other.cover and self.ideal == other.ideal

    def __hash__(self):
        return hash((self.cover, self.ideal))

    @property
    def field(self):
        return self.cover.field

    @property
    def nvars(self) -> int:
        return self.cover.nvars

    @property
    def zero(self) -> PolyElement:
        return self.cover.zero

    @property
    def one(self) -> PolyElement:
        return self.cover.one

    @property
    def graded(self) -> bool:
        return self.ideal.is_homogeneous

    @property
    def graded_local(self) -> bool:
        """Homogeneous I inside the irrelevant ideal: (R, m) behaves like a local ring."""
        return self.graded and not self.ideal.is_unit

    @property
    def is_cover(self) -> bool:
        return self.ideal.is_zero

    def cover_ring(self) -> "QuotientRing":
        """The cover P as a quotient by the zero ideal."""
        return QuotientRing.polynomial(self.cover, name=self.name and f"cover({self.name})")

    def quotient(self, extra, name: str = "") -> "QuotientRing":
        """R/(extra), sharing the cover."""
        return QuotientRing(self.cover, self.ideal.extend(extra), name)

    def is_evidently_regular(self) -> bool:
        """
        Regularity that can be read off directly: I = 0, I generated by
        variables, or a squarefree univariate relation (a finite product of fields).
        """
        if self.ideal.is_zero:
            return True
        basis = self.ideal.basis
        if all(len(g) == 1 and sum(g.LM) == 1 for g in basis):
            return True
        if self.nvars == 1 and len(basis) == 1:
            f = basis[0]
            derivative = f.diff(self.cover.gens[0])
            return f.gcd(derivative).is_ground
        return False

    def krull_dim(self) -> int:
        return self.ideal.krull_dim()

    def reduce(self, poly: PolyElement) -> PolyElement:
        return self.ideal.normal_form(poly)

    def is_zero(self, poly: PolyElement) -> bool:
        return self.ideal.contains(poly)

    def parse(self, text: str, line: int | None = None, offset: int = 0) -> PolyElement:
        return self.reduce(self.cover.parse(text, line, offset))

    def format(self, poly: PolyElement) -> str:
        return self.cover.format(poly)

    def irrelevant_ideal(self) -> "PrimeIdeal":
        return PrimeIdeal(self, self.cover.gens, name="m")

    def describe(self) -> str:
        if self.ideal.is_zero:
            return self.cover.describe()
        return f"{self.cover.describe()}/{self.ideal.format()}"


@dataclass(frozen=True, eq=False)
class PrimeIdeal:
    """
    A declared prime of a quotient ring, given by generators in the cover.

    Primality is asserted by the caller; only I ⊆ p and 1 ∉ p are checked.
    """

    ring: QuotientRing
    generators: tuple[PolyElement, ...]
    name: str = ""
    ideal: Ideal = dataclass_field(init=False, repr=False)

    def __post_init__(self):
        ideal = Ideal(self.ring.cover, tuple(self.generators))
        if ideal.is_unit:
            logger.error(f"Declared prime {self.label} is the unit ideal")
            raise ValueError(f"Declared prime {self.label} is the unit ideal")
        if not ideal.contains_ideal(self.ring.ideal):
            logger.error(f"Declared prime {self.label} does not contain the defining ideal")
            raise ValueError(
                f"Declared prime {self.label} does not contain the defining ideal "
                f"{self.ring.ideal.format()}"
            )
        object.__setattr__(self, "ideal", ideal)

    @classmethod
    def parse(cls, ring: QuotientRing, texts: list[str], name: str = "") -> "PrimeIdeal":
        return cls(ring, tuple(ring.cover.parse(t) for t in texts), name)

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return "(" + ", ".join(self.ring.cover.format(g) for g in self.generators) + ")"

    def contains(self, other: Ideal) -> bool:
        """Support test: a module with annihilator `other` localizes to nonzero iff other ⊆ p."""
        return self.ideal.contains_ideal(other)

    def coheight(self) -> int:
        """dim P/p, the dimension of the closed subset V(p)."""
        return self.ideal.krull_dim()

    @property
    def is_maximal(self) -> bool:
        return self.coheight() == 0

    def extend_to(self, ring: QuotientRing) -> "PrimeIdeal":
        """The same generators viewed in another quotient of the cover."""
        return PrimeIdeal(ring, self.generators + ring.ideal.generators, self.name)


@dataclass(frozen=True)
class Localization:
    """
    The semilocalization of a ring at finitely many declared primes.

    Nothing is inverted explicitly: a module localizes to zero exactly when its
    annihilator lies in none of the primes.
    """

    ring: QuotientRing
    primes: tuple[PrimeIdeal, ...]

    def __post_init__(self):
        if not self.primes:
            raise ValueError("A semilocal model needs at least one declared prime")
        for p in self.primes:
            if p.ring != self.ring:
                raise RingMismatchError(f"Prime {p.label} belongs to another ring")

    def supports(self, annihilator: Ideal) -> bool:
        return any(p.contains(annihilator) for p in self.primes)

    def labels(self) -> list[str]:
        return [p.label for p in self.primes]


def normal_form(poly: PolyElement, ideal: Ideal) -> PolyElement:
    """Canonical representative of `poly` modulo `ideal`; zero iff poly ∈ ideal."""
    if poly.ring != ideal.ring.ring:
        raise RingMismatchError("Polynomial and ideal live in different rings")
    return ideal.normal_form(poly)


def ideal_contains(container: Ideal, contained: Ideal) -> bool:
    """True iff every generator of `contained` reduces to zero modulo `container`."""
    return container.contains_ideal(contained)
