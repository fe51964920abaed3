"""
Unit tests for the Semidual Modules package.
"""

import pytest
from semidual.derived import depth
from semidual.errors import ScriptParseError, UnsupportedRingError
from semidual.extint import ExtInt
from semidual.modules import (
    FPModule,
    FreeComplex,
    Matrix,
    ModuleComplex,
    PdCertificate,
    betti_numbers,
    graded_betti_numbers,
    minimal_free_resolution,
    pd,
    syzygies,
)
from semidual.ring import Ideal, PolyRing, QuotientRing, make_field


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


class TestMatrix:
    """Tests for matrices in the row/column text format."""

    def test_parse_shape(self, plane):
        """Test that rows are separated by '|' and entries by ';'."""
        matrix = Matrix.parse(plane, "x; y | 0; 1")
        assert matrix.shape == (2, 2)
        assert matrix.entry(0, 1) == plane.parse("y")
        assert matrix.entry(1, 0) == plane.zero

    def test_ragged_rows(self, plane):
        """Test that rows of different lengths are rejected."""
        with pytest.raises(ScriptParseError, match="different lengths"):
            Matrix.parse(plane, "x; y | 1", line=4)

    def test_expected_shape(self, plane):
        """Test the row count check."""
        with pytest.raises(ScriptParseError, match="Expected 2 rows"):
            Matrix.parse(plane, "x; y", rows=2)

    def test_product_and_transpose(self, plane):
        """Test composition against the identity and transposition."""
        matrix = Matrix.parse(plane, "x; y")
        assert Matrix.identity(plane, 1) @ matrix == matrix
        assert matrix.transpose().shape == (2, 1)
        assert (matrix - matrix).is_zero()

    def test_unit_entries(self, plane):
        """Test that a unit entry makes a matrix non-minimal."""
        assert not Matrix.parse(plane, "1; x").is_minimal()
        assert Matrix.parse(plane, "x; y").is_minimal()


class TestFPModule:
    """Tests for finitely presented modules."""

    def test_cyclic_hilbert_function(self, plane):
        """Test dim_k of k[x, y]/(x^2) in low degrees."""
        module = FPModule.cyclic(plane, [plane.parse("x^2")])
        assert module.hilbert_window(0, 3) == [1, 2, 2, 2]

    def test_annihilator_of_sum(self, plane):
        """Test Ann(R/(x) ⊕ R/(y)) = (xy)."""
        module = FPModule.cyclic(plane, [plane.parse("x")]).direct_sum(
            FPModule.cyclic(plane, [plane.parse("y")])
        )
        expected = QuotientRing.from_text(plane.cover, ["x*y"]).ideal
        assert module.annihilator() == expected

    def test_minimal_generators(self, plane):
        """Test that a relation with a unit coefficient removes a generator."""
        presentation = Matrix.parse(plane, "1; -x")
        module = FPModule.from_matrix(plane, presentation, twists=(1, 0))
        assert module.ngens == 2
        assert module.minimal_generator_count() == 1
        assert module.pruned().ngens == 1

    def test_residue_field_needs_graded_local(self):
        """Test that k = R/m is refused over an inhomogeneous ring."""
        ring = _ring("T", ["T^2 - T"])
        with pytest.raises(UnsupportedRingError, match="not graded-local"):
            FPModule.residue_field(ring)

    def test_zero_module(self, plane):
        """Test the zero module and its dimension."""
        module = FPModule.cyclic(plane, [plane.one])
        assert module.is_zero()
        assert module.krull_dim() == -1

    def test_hom_into_ring(self, plane, dual_numbers):
        """Test Hom(R/(x), R): zero over k[x, y], the socle (x) over k[x]/(x^2)."""
        over_plane = FPModule.cyclic(plane, [plane.parse("x")]).hom(FPModule.free(plane, 1))
        assert over_plane.module.is_zero()
        residue = FPModule.residue_field(dual_numbers)
        socle = residue.hom(FPModule.free(dual_numbers, 1)).module
        assert socle.minimal_generator_count() == 1

    def test_twisted(self, plane):
        """Test that a twist raises generator degrees."""
        module = FPModule.free(plane, (0, 2)).twisted(1)
        assert module.twists == (1, 3)


class TestResolutions:
    """Tests for minimal free resolutions and projective dimension."""

    def test_koszul_ranks(self):
        """Test that k over k[x, y, z] has ranks 1, 3, 3, 1."""
        ring = _ring("x y z", [])
        resolution = minimal_free_resolution(FPModule.residue_field(ring), 3)
        assert resolution.ranks() == [1, 3, 3, 1]

    def test_pd_terminated(self, plane):
        """Test pd of k over k[x, y]."""
        report = pd(FPModule.residue_field(plane))
        assert report.value == 2
        assert report.certificate == PdCertificate.TERMINATED
        assert report.to_dict()["value"] == 2

    def test_pd_free_and_zero(self, plane):
        """Test pd of free and zero modules."""
        assert pd(FPModule.free(plane, 2)).value == 0
        assert pd(FPModule.zero(plane)).value == ExtInt.neg_inf()

    def test_pd_infinite(self, dual_numbers):
        """Test that k over k[x]/(x^2) has pd = ∞ with a syzygy witness."""
        report = pd(FPModule.residue_field(dual_numbers))
        assert report.value == ExtInt.pos_inf()
        assert report.certificate == PdCertificate.INFINITE
        assert report.syzygy is not None
        assert report.to_dict()["value"] == "inf"

    def test_betti_numbers(self, dual_numbers, plane):
        """Test total and graded Betti numbers."""
        assert betti_numbers(FPModule.residue_field(dual_numbers), 3) == [1, 1, 1, 1]
        table = graded_betti_numbers(FPModule.residue_field(plane), 2)
        assert table == {(0, 0): 1, (1, 1): 2, (2, 2): 1}

    def test_resolutions_are_minimal(self, plane):
        """Test that no differential of a minimal resolution has a unit entry."""
        ring = _ring("x y z", ["y^2", "y*z"])
        for module in (FPModule.residue_field(plane), FPModule.residue_field(ring)):
            assert minimal_free_resolution(module, 3).is_minimal()

    def test_pd_plus_depth(self, plane):
        """Test pd M + depth M = depth R = 2 over k[x, y]."""
        modules = [
            FPModule.residue_field(plane),
            FPModule.cyclic(plane, [plane.parse("x")]),
            FPModule.cyclic(plane, [plane.parse("x^2"), plane.parse("x*y")]),
            FPModule.free(plane, 1),
        ]
        for module in modules:
            assert pd(module).value + depth(module) == depth(plane)

    def test_negative_cutoff(self, plane):
        """Test that a negative cutoff is rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            minimal_free_resolution(FPModule.free(plane, 1), -1)


class TestModuleComplex:
    """Tests for bounded complexes of modules."""

    def test_nonzero_square_rejected(self, plane):
        """Test that ∂∂ ≠ 0 is rejected."""
        free = FPModule.free(plane, 1)
        modules = {0: free, 1: free, 2: free}
        differentials = {1: Matrix.parse(plane, "x"), 2: Matrix.parse(plane, "y")}
        with pytest.raises(ValueError, match="is not zero"):
            ModuleComplex(plane, modules, differentials)

    def test_shape_mismatch(self, plane):
        """Test that a differential of the wrong shape is rejected."""
        modules = {0: FPModule.free(plane, 1), 1: FPModule.free(plane, 2)}
        with pytest.raises(ValueError, match="has shape"):
            ModuleComplex(plane, modules, {1: Matrix.parse(plane, "x")})

    def test_homology_of_multiplication(self, plane):
        """Test that R --x--> R has homology R/(x) in degree 0 only."""
        complex_ = FreeComplex(plane, {0: (0,), 1: (1,)}, {1: Matrix.parse(plane, "x")})
        assert complex_.homology(1).is_zero()
        h0 = complex_.homology(0)
        assert h0.annihilator() == QuotientRing.from_text(plane.cover, ["x"]).ideal

    def test_shift(self, plane):
        """Test that Σ^k moves every module up by k."""
        complex_ = ModuleComplex.concentrated(FPModule.free(plane, 1), 0, "R")
        shifted = complex_.shift(2)
        assert (shifted.lo, shifted.hi) == (2, 2)
        assert shifted.label() == "Σ^2R"


class TestSyzygies:
    """Tests for syzygies."""

    def test_koszul_relation(self, plane):
        """Test that the kernel of (x, y): R^2 -> R is spanned by one relation of degree 2."""
        matrix = Matrix.parse(plane, "x; y")
        relations = syzygies(matrix)
        assert relations.shape == (2, 1)
        assert (matrix @ relations).is_zero()
        assert relations.entry(0, 0) in (plane.parse("y"), plane.parse("-y"))

    def test_annihilator(self):
        """Test that the kernel of multiplication by Y is Ann(Y) = (Y, Z)."""
        ring = _ring("Y Z", ["Y^2", "Y*Z"])
        relations = syzygies(Matrix.parse(ring, "Y"))
        assert relations.shape == (1, 2)
        found = Ideal(ring.cover, relations.row(0) + tuple(ring.ideal.generators))
        assert found == Ideal.parse(ring.cover, ["Y", "Z"])

    def test_injective_map(self, plane):
        """Test that the identity has no syzygies."""
        assert syzygies(Matrix.identity(plane, 2)).shape == (2, 0)
