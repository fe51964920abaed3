"""
Unit tests for the Semidual Derived package.
"""

import pytest
from semidual.complexes import nonzero_degrees
from semidual.derived import (
    CoverDual,
    CoverModel,
    LaurentPoly,
    WindowCertificate,
    WindowKind,
    as_complex,
    bass_series,
    depth,
    derived_tensor,
    ext,
    poincare_series,
    rhom,
    series_identity,
    tor,
)
from semidual.errors import RingMismatchError, UnsupportedRingError
from semidual.extint import ExtInt
from semidual.modules import FPModule, FreeComplex, ModuleComplex
from semidual.ring import PolyRing, QuotientRing, make_field


def _ring(names: str, relations: list[str], name: str = "R") -> QuotientRing:
    cover = PolyRing(tuple(names.split()), make_field(32003))
    return QuotientRing.from_text(cover, relations, name)


@pytest.fixture
def plane():
    """k[x, y]."""
    return _ring("x y", [])


@pytest.fixture
def dual_numbers():
    """k[x]/(x^2)."""
    return _ring("x", ["x^2"])


class TestLaurentPoly:
    """Tests for truncated Laurent polynomials."""

    def test_product(self):
        """Test (1 + t)(1 - t) = 1 - t^2."""
        product = LaurentPoly.from_list([1, 1]) * LaurentPoly.from_list([1, -1])
        assert product == LaurentPoly.from_list([1, 0, -1])

    def test_product_truncation(self):
        """Test that a truncated factor bounds the product."""
        product = LaurentPoly.from_list([1, 1], top=2) * LaurentPoly.monomial(1)
        assert product.top == 3

    def test_quotient(self):
        """Test (1 - t^2) / (1 + t) = 1 - t."""
        quotient = LaurentPoly.from_list([1, 0, -1]).quotient(LaurentPoly.from_list([1, 1]), 3)
        assert quotient.terms == ((0, 1), (1, -1))
        assert quotient.top == 3

    def test_non_integral_quotient(self):
        """Test that an inexact division step is rejected."""
        with pytest.raises(ValueError, match="not integral"):
            LaurentPoly.from_list([1, 1]).quotient(LaurentPoly.monomial(0, 2), 1)

    def test_zero_divisor(self):
        """Test division by the zero series."""
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.one().quotient(LaurentPoly(), 2)

    def test_coefficient_beyond_top(self):
        """Test that unknown coefficients are not invented."""
        series = LaurentPoly.from_list([1, 2], top=1)
        assert series.coefficient(1) == 2
        with pytest.raises(ValueError, match="beyond the truncation"):
            series.coefficient(2)

    def test_agrees_on_common_window(self):
        """Test comparison up to the smaller truncation."""
        left = LaurentPoly.from_list([1, 1, 5], top=2)
        right = LaurentPoly.from_list([1, 1], top=1)
        assert left.agrees(right)
        assert not left.agrees(LaurentPoly.from_list([1, 1, 1]))

    def test_text(self):
        """Test the sparse text form."""
        series = LaurentPoly.from_list([1, 0, 3], top=2)
        assert series.to_list() == ["1*t^0", "3*t^2"]
        assert str(series) == "1*t^0 + 3*t^2 + O(t^3)"


class TestWindowCertificate:
    """Tests for certified windows."""

    def test_exact_covers_everything(self):
        """Test that a finite-pd certificate claims every degree."""
        certificate = WindowCertificate.exact()
        assert certificate.is_exact
        assert certificate.covers(-100)
        assert certificate.to_dict() == {"kind": "finite-pd", "cutoff": None}

    def test_window_bounds(self):
        """Test the open interval of a truncated window."""
        certificate = WindowCertificate(WindowKind.AB_WINDOW, 5, ExtInt(-5))
        assert certificate.covers(-4)
        assert not certificate.covers(-5)
        assert certificate.to_dict()["valid"] == [-5, "inf"]

    def test_meet_and_shift(self):
        """Test combining two windows and shifting one."""
        first = WindowCertificate(WindowKind.AB_WINDOW, 5, ExtInt(-5))
        second = WindowCertificate(WindowKind.USER, 3, ExtInt(-7), ExtInt(2))
        meet = first.meet(second)
        assert meet.kind == WindowKind.USER
        assert meet.cutoff == 3
        assert (meet.above, meet.below) == (ExtInt(-5), ExtInt(2))
        assert first.shifted(2).above == -3
        assert WindowCertificate.exact().meet(first) == first


class TestDepth:
    """Tests for Koszul depth."""

    def test_polynomial_ring(self, plane):
        """Test depth k[x, y] = 2."""
        assert depth(plane) == 2

    def test_artinian_ring(self, dual_numbers):
        """Test depth k[x]/(x^2) = 0."""
        assert depth(dual_numbers) == 0

    def test_embedded_prime(self):
        """Test depth 1 for k[x, y, z]/(y^2, yz)."""
        assert depth(_ring("x y z", ["y^2", "y*z"])) == 1

    def test_residue_field(self, plane):
        """Test depth k = 0 as a module."""
        assert depth(FPModule.residue_field(plane)) == 0

    def test_shift_lowers_depth(self, plane):
        """Test depth R/(x) = 1 and depth Σ R/(x) = 0."""
        module = FPModule.cyclic(plane, [plane.parse("x")])
        assert depth(module) == 1
        assert depth(ModuleComplex.concentrated(module).shift(1)) == 0
        assert depth(ModuleComplex.concentrated(module).shift(-1)) == 2

    def test_exact_complex(self, plane):
        """Test depth = +∞ for an exact complex."""
        assert depth(FreeComplex.zero(plane)) == ExtInt.pos_inf()

    def test_inhomogeneous_ring(self):
        """Test that depth is refused outside graded-local rings."""
        with pytest.raises(UnsupportedRingError, match="localized invariants"):
            depth(_ring("T", ["T^2 - T"]))


class TestFunctors:
    """Tests for RHom, the derived tensor product, Ext and Tor."""

    def test_ext_of_residue_field(self, plane):
        """Test Ext^i(k, R) over k[x, y]: only Ext^2 survives."""
        residue = FPModule.residue_field(plane)
        ring_complex = FreeComplex.ring_complex(plane)
        result = rhom(residue, ring_complex)
        assert result.is_exact
        assert nonzero_degrees(result) == [-2]
        assert ext(residue, ring_complex, 2).minimal_generator_count() == 1

    def test_tor_of_residue_field(self, plane):
        """Test Tor_1(k, k) = k^2 over k[x, y]."""
        residue = FPModule.residue_field(plane)
        assert tor(residue, residue, 1).minimal_generator_count() == 2
        assert nonzero_degrees(derived_tensor(residue, residue)) == [0, 1, 2]

    def test_windowed_rhom(self, dual_numbers):
        """Test that an infinite resolution gives a certified window only."""
        residue = FPModule.residue_field(dual_numbers)
        result = rhom(residue, residue, 3)
        assert not result.is_exact
        assert result.certificate.kind == WindowKind.USER
        assert result.homology(-2).minimal_generator_count() == 1
        with pytest.raises(ValueError, match="outside the window"):
            result.homology(-5)
        with pytest.raises(UnsupportedRingError, match="only known on a window"):
            as_complex(result)

    def test_windowed_tensor(self, dual_numbers):
        """Test Tor_i(k, k) = k inside the window over k[x]/(x^2)."""
        residue = FPModule.residue_field(dual_numbers)
        result = derived_tensor(residue, residue, 3)
        assert not result.is_exact
        assert result.homology(2).minimal_generator_count() == 1

    def test_ring_mismatch(self, plane, dual_numbers):
        """Test that both arguments must live over one ring."""
        with pytest.raises(RingMismatchError):
            rhom(FPModule.residue_field(plane), FPModule.residue_field(dual_numbers))


class TestCoverDual:
    """Tests for dualizing complexes computed over the cover."""

    def test_homology_degree(self, dual_numbers):
        """Test that Σ^1 Hom_P(F, P) has homology R in degree 0."""
        dual = CoverDual(dual_numbers, 1)
        assert nonzero_degrees(dual) == [0]
        assert dual.representative().module(0).minimal_generator_count() == 1

    def test_shift(self, dual_numbers):
        """Test that shifting adds to the offset."""
        shifted = CoverDual(dual_numbers, 1).shift(2)
        assert shifted.offset == 3
        assert shifted.label() == "Σ^2D"
        assert nonzero_degrees(shifted) == [2]

    def test_rhom_of_residue_field(self, dual_numbers):
        """Test that RHom(k, D) is k in degree 0 and exact."""
        result = rhom(FPModule.residue_field(dual_numbers), CoverDual(dual_numbers, 1))
        assert result.is_exact
        assert nonzero_degrees(result) == [0]

    def test_model_over_wrong_ring(self, dual_numbers):
        """Test that a cover model must be built over the cover."""
        with pytest.raises(RingMismatchError, match="another ring"):
            CoverModel(dual_numbers, FreeComplex.ring_complex(dual_numbers))


class TestSeries:
    """Tests for Poincare and Bass series."""

    def test_poincare_of_residue_field(self, plane, dual_numbers):
        """Test exact and truncated Poincare series of k."""
        assert poincare_series(FPModule.residue_field(plane), 3) == LaurentPoly.from_list(
            [1, 2, 1]
        )
        truncated = poincare_series(FPModule.residue_field(dual_numbers), 3)
        assert truncated == LaurentPoly.from_list([1, 1, 1, 1], top=3)

    def test_bass_of_ring(self, plane):
        """Test that k[x, y] has a single Bass number in degree 2."""
        series = bass_series(FreeComplex.ring_complex(plane), 3)
        assert series.terms == ((2, 1),)
        assert series.top == 3

    def test_identity_for_ring(self, plane):
        """Test that R itself satisfies the P·I identity."""
        _, _, holds = series_identity(FreeComplex.ring_complex(plane), 3)
        assert holds

    def test_inhomogeneous_ring(self):
        """Test that series are refused outside graded-local rings."""
        ring = _ring("T", ["T^2 - T"])
        with pytest.raises(UnsupportedRingError):
            poincare_series(FreeComplex.ring_complex(ring), 2)
