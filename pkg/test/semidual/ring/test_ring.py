"""
Unit tests for the Semidual Ring package.
"""

import itertools
import random

import pytest
from semidual.errors import ScriptParseError
from semidual.extint import ExtInt, ext_max, ext_min
from semidual.ring import (
    Ideal,
    Localization,
    PolyRing,
    PrimeIdeal,
    QuotientRing,
    field_descriptor,
    groebner,
    ideal_contains,
    make_field,
    normal_form,
)


def _random_poly(rng: random.Random, cover: PolyRing):
    """Up to three terms of degree at most three with small coefficients."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        monomial = tuple(rng.randint(0, 2) for _ in cover.names)
        if sum(monomial) <= 3:
            terms[monomial] = rng.choice([c for c in range(-5, 6) if c])
    return cover.from_terms(terms) if terms else cover.gens[0]


def _random_polys(rng: random.Random, cover: PolyRing, count: int) -> tuple:
    return tuple(_random_poly(rng, cover) for _ in range(count))


@pytest.fixture
def field():
    return make_field(32003)


@pytest.fixture
def cover(field):
    return PolyRing(("x", "y"), field)


class TestFields:
    """Tests for coefficient field descriptors."""

    def test_default_field(self):
        """Test that no descriptor selects F_32003."""
        assert field_descriptor(make_field()) == "32003"

    def test_rationals(self):
        """Test the rational descriptor in either spelling."""
        assert field_descriptor(make_field("Q")) == "Q"
        assert field_descriptor(make_field("qq")) == "Q"

    def test_prime_from_string(self):
        """Test that a decimal string selects the prime field."""
        assert field_descriptor(make_field("101")) == "101"

    def test_characteristic_two_rejected(self):
        """Test that characteristic 2 is unsupported."""
        with pytest.raises(ValueError, match="Characteristic 2"):
            make_field(2)

    def test_composite_rejected(self):
        """Test that a composite characteristic is rejected."""
        with pytest.raises(ValueError, match="odd prime"):
            make_field(9)

    def test_garbage_rejected(self):
        """Test that an unreadable descriptor is rejected."""
        with pytest.raises(ValueError, match="Invalid field descriptor"):
            make_field("abc")


class TestPolyRing:
    """Tests for the polynomial cover and its parser."""

    def test_parse_format_round_trip(self, cover):
        """Test that formatting then parsing returns the same polynomial."""
        poly = cover.parse("x^2 - 3*x*y + 1")
        assert cover.parse(cover.format(poly)) == poly

    def test_format_monomial(self, cover):
        """Test the text of a single monomial."""
        assert cover.format(cover.parse("x*y")) == "x*y"
        assert cover.format(cover.zero) == "0"

    def test_degree_and_homogeneity(self, cover):
        """Test standard degrees."""
        assert cover.degree(cover.parse("x^2*y")) == 3
        assert cover.is_homogeneous(cover.parse("x^2 + x*y"))
        assert not cover.is_homogeneous(cover.parse("x^2 + y"))

    def test_weighted_degree(self, field):
        """Test degrees under non-standard weights."""
        weighted = PolyRing(("x", "y"), field, (1, 2))
        assert weighted.degree(weighted.parse("y")) == 2
        assert weighted.is_homogeneous(weighted.parse("x^2 + y"))

    def test_implicit_multiplication_rejected(self, cover):
        """Test that juxtaposition is a positioned parse error."""
        with pytest.raises(ScriptParseError, match="Implicit multiplication") as info:
            cover.parse("2x", line=3)
        assert info.value.line == 3
        assert info.value.column == 2

    def test_unknown_variable(self, cover):
        """Test that a variable outside the ring is rejected."""
        with pytest.raises(ScriptParseError, match="Unknown variable 'w'"):
            cover.parse("x + w")

    def test_empty_polynomial(self, cover):
        """Test that empty text is rejected."""
        with pytest.raises(ScriptParseError, match="Empty polynomial"):
            cover.parse("   ")

    def test_duplicate_names(self, field):
        """Test that variable names must be unique."""
        with pytest.raises(ValueError, match="unique"):
            PolyRing(("x", "x"), field)

    def test_extend(self, cover):
        """Test appending variables for a module-finite extension."""
        bigger = cover.extend(("t",))
        assert bigger.names == ("x", "y", "t")
        assert cover.embed(cover.parse("x*y"), bigger) == bigger.parse("x*y")


class TestIdeal:
    """Tests for ideals of the cover."""

    def test_membership(self, cover):
        """Test membership through normal forms."""
        ideal = Ideal.parse(cover, ["x*y", "y^2"])
        assert ideal.contains(cover.parse("x*y^2 + y^2"))
        assert not ideal.contains(cover.parse("x"))

    def test_krull_dimension(self, cover):
        """Test dimensions read off the leading terms."""
        assert Ideal.parse(cover, ["x*y", "y^2"]).krull_dim() == 1
        assert Ideal.zero(cover).krull_dim() == 2
        assert Ideal.irrelevant(cover).krull_dim() == 0
        assert Ideal.parse(cover, ["1"]).krull_dim() == -1

    def test_intersection(self, cover):
        """Test (x) ∩ (y) = (xy)."""
        meet = Ideal.parse(cover, ["x"]).intersect(Ideal.parse(cover, ["y"]))
        assert meet == Ideal.parse(cover, ["x*y"])

    def test_colon(self, cover):
        """Test (xy) : (x) = (y)."""
        colon = Ideal.parse(cover, ["x*y"]).colon(Ideal.parse(cover, ["x"]))
        assert colon == Ideal.parse(cover, ["y"])

    def test_equality_ignores_generators(self, cover):
        """Test that equal ideals compare equal whatever their generators."""
        first = Ideal.parse(cover, ["x", "y"])
        second = Ideal.parse(cover, ["x + y", "y"])
        assert first == second
        assert first.basis_text() == second.basis_text()

    def test_homogeneity(self, cover):
        """Test the homogeneity flag."""
        assert Ideal.parse(cover, ["x^2", "x*y"]).is_homogeneous
        assert not Ideal.parse(cover, ["x^2 - x"]).is_homogeneous


class TestGroebnerProperties:
    """Tests for Groebner bases, normal forms and containment on seeded random ideals."""

    @pytest.mark.parametrize("seed", range(8))
    def test_groebner_idempotent(self, cover, seed):
        """Test that the basis of a reduced basis is itself."""
        rng = random.Random(seed)
        basis = groebner(cover, _random_polys(rng, cover, 3))
        assert groebner(cover, basis) == basis

    @pytest.mark.parametrize("seed", range(8))
    def test_normal_form_linear(self, cover, seed):
        """Test nf(a f + g) = a nf(f) + nf(g)."""
        rng = random.Random(seed)
        ideal = Ideal(cover, _random_polys(rng, cover, 2))
        f, g = _random_poly(rng, cover), _random_poly(rng, cover)
        a = rng.randint(2, 50)
        expected = normal_form(f, ideal) * a + normal_form(g, ideal)
        assert normal_form(f * a + g, ideal) == expected

    @pytest.mark.parametrize("seed", range(8))
    def test_members_reduce_to_zero(self, cover, seed):
        """Test that a combination of the generators reduces to 0."""
        rng = random.Random(seed)
        generators = _random_polys(rng, cover, 3)
        ideal = Ideal(cover, generators)
        member = cover.zero
        for generator in generators:
            member += _random_poly(rng, cover) * generator
        assert not normal_form(member, ideal)
        assert ideal.contains(member)

    @pytest.mark.parametrize("seed", range(8))
    def test_containment_is_a_preorder(self, cover, seed):
        """Test reflexivity, a nested chain and transitivity on a random triple."""
        rng = random.Random(seed)
        small = _random_polys(rng, cover, 1)
        middle = small + _random_polys(rng, cover, 1)
        large = middle + _random_polys(rng, cover, 1)
        first, second, third = (Ideal(cover, g) for g in (large, middle, small))
        assert ideal_contains(first, first)
        assert ideal_contains(first, second) and ideal_contains(second, third)
        assert ideal_contains(first, third)

        triple = [Ideal(cover, _random_polys(rng, cover, 2)) for _ in range(3)]
        for outer, inner, innermost in itertools.permutations(triple):
            if ideal_contains(outer, inner) and ideal_contains(inner, innermost):
                assert ideal_contains(outer, innermost)


class TestQuotientRing:
    """Tests for quotient rings."""

    def test_graded_local(self, cover):
        """Test that a homogeneous proper ideal gives a graded-local ring."""
        ring = QuotientRing.from_text(cover, ["x^2", "x*y"], "R")
        assert ring.graded_local
        assert ring.krull_dim() == 1
        assert ring.is_zero(ring.parse("x^2*y + x*y"))

    def test_product_of_fields(self, field):
        """Test that a squarefree univariate relation is evidently regular."""
        ring = QuotientRing.from_text(PolyRing(("T",), field), ["T^2 - T"])
        assert not ring.graded_local
        assert ring.is_evidently_regular()

    def test_quotient_shares_cover(self, cover):
        """Test that further quotients keep the cover."""
        ring = QuotientRing.polynomial(cover, "R")
        target = ring.quotient([cover.parse("x")], "S")
        assert target.cover == ring.cover
        assert target.is_zero(target.parse("x*y"))
        assert target.name == "S"

    def test_describe(self, cover):
        """Test the ring description."""
        ring = QuotientRing.from_text(cover, ["x^2"])
        assert ring.describe().endswith("/(x^2)")


class TestPrimes:
    """Tests for declared primes and semilocalizations."""

    def test_prime_must_contain_defining_ideal(self, cover):
        """Test the containment check on declared primes."""
        ring = QuotientRing.from_text(cover, ["x*y"])
        with pytest.raises(ValueError, match="does not contain the defining ideal"):
            PrimeIdeal.parse(ring, ["x - 1"], "p")

    def test_unit_prime_rejected(self, cover):
        """Test that the unit ideal is not a prime."""
        ring = QuotientRing.polynomial(cover)
        with pytest.raises(ValueError, match="unit ideal"):
            PrimeIdeal.parse(ring, ["1"], "p")

    def test_coheight(self, cover):
        """Test maximality through the coheight."""
        ring = QuotientRing.polynomial(cover)
        assert PrimeIdeal.parse(ring, ["x", "y"], "m").is_maximal
        assert PrimeIdeal.parse(ring, ["x"], "p").coheight() == 1

    def test_localization_supports(self, cover):
        """Test support through annihilator containment."""
        ring = QuotientRing.polynomial(cover)
        m = PrimeIdeal.parse(ring, ["x", "y"], "m")
        n = PrimeIdeal.parse(ring, ["x - 1", "y"], "n")
        semilocal = Localization(ring, (m, n))
        assert semilocal.labels() == ["m", "n"]
        assert semilocal.supports(Ideal.parse(cover, ["y"]))
        assert not semilocal.supports(Ideal.parse(cover, ["x^2 - x", "y - 1"]))

    def test_localization_needs_primes(self, cover):
        """Test that a semilocalization needs at least one prime."""
        with pytest.raises(ValueError, match="at least one declared prime"):
            Localization(QuotientRing.polynomial(cover), ())


class TestExtInt:
    """Tests for extended integers."""

    def test_arithmetic(self):
        """Test sums with integers and infinities."""
        assert ExtInt(2) + 3 == 5
        assert ExtInt.pos_inf() + 7 == ExtInt.pos_inf()
        assert 1 - ExtInt.neg_inf() == ExtInt.pos_inf()

    def test_undefined_sum(self):
        """Test that inf - inf is rejected."""
        with pytest.raises(ArithmeticError, match="undefined"):
            ExtInt.pos_inf() + ExtInt.neg_inf()

    def test_ordering(self):
        """Test the order on extended integers."""
        assert ExtInt.neg_inf() < ExtInt(-100) < ExtInt(0) < ExtInt.pos_inf()
        assert ext_min([]) == ExtInt.pos_inf()
        assert ext_max([]) == ExtInt.neg_inf()
        assert ext_min([3, ExtInt(1), ExtInt.pos_inf()]) == 1

    def test_json_and_parse(self):
        """Test the JSON form of infinities."""
        assert ExtInt.pos_inf().to_json() == "inf"
        assert ExtInt.neg_inf().to_json() == "-inf"
        assert ExtInt(4).to_json() == 4
        assert ExtInt.parse("-inf") == ExtInt.neg_inf()
        assert ExtInt.parse("∞") == ExtInt.pos_inf()

    def test_int_of_infinity(self):
        """Test that infinities have no integer value."""
        with pytest.raises(OverflowError):
            int(ExtInt.pos_inf())
