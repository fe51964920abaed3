"""
Unit tests for the Semidual Basechange package.
"""

import pytest
from semidual.basechange import (
    DescentKind,
    HypothesisStatus,
    MapKind,
    RingMap,
    amplitude_check,
    base_change,
    cobase_change,
    cone_tensor_check,
    descent_gdim,
    ext_concentration,
    fitting_ideal,
    grade_profile,
    is_regular_sequence,
    map_pd,
    projective_dimension,
    series_transfer,
    tensor_gdim_bounds,
    transfer_uniqueness,
)
from semidual.complexes import inf, multiplication
from semidual.derived import CoverDual
from semidual.duality import Construction, canonical_module, dualizing_complex
from semidual.errors import RingMismatchError, VerificationError
from semidual.modules import FPModule, FreeComplex, Matrix
from semidual.ring import Ideal, PolyRing, PrimeIdeal, QuotientRing, make_field


@pytest.fixture
def field():
    return make_field(32003)


@pytest.fixture
def plane(field):
    """k[x, y]."""
    return QuotientRing.polynomial(PolyRing(("x", "y"), field), "R")


@pytest.fixture
def phi(plane):
    """k[x, y] -> k[x, y]/(x)."""
    return RingMap.surjection(plane, [plane.parse("x")], "phi")


def _ring_complex(ring):
    return FreeComplex.ring_complex(ring)


class TestRingMap:
    """Tests for ring maps."""

    def test_surjection(self, plane, phi):
        """Test the target, the hypothesis flag and pd_R(S)."""
        assert phi.kind == MapKind.SURJECTION
        assert phi.target.is_zero(phi.target.parse("x*y"))
        assert phi.hypothesis() == HypothesisStatus.CERTIFIED
        assert map_pd(phi).value == 1
        assert phi.to_dict()["kernel-gens"] == ["x"]

    def test_kernel_outside_irrelevant_ideal(self, plane):
        """Test that a kernel off the origin leaves maximal ideals uncovered."""
        shifted = RingMap.surjection(plane, [plane.parse("x - 1")])
        assert shifted.hypothesis() == HypothesisStatus.NOT_COVERED

    def test_wrong_kernel(self, plane):
        """Test that the target must be R modulo the declared kernel."""
        target = plane.quotient([plane.parse("y")], "S")
        with pytest.raises(VerificationError, match="modulo the kernel"):
            RingMap(plane, target, MapKind.SURJECTION, (plane.parse("x"),))

    def test_regular_sequences(self, plane):
        """Test Koszul regularity."""
        x, y = plane.parse("x"), plane.parse("y")
        assert is_regular_sequence(plane, [x, y])
        assert not is_regular_sequence(plane, [x, x])
        assert not is_regular_sequence(plane, [plane.one])


class TestModuleFinite:
    """Tests for module-finite maps."""

    @pytest.fixture
    def line(self, field):
        return QuotientRing.polynomial(PolyRing(("x",), field), "R")

    @pytest.fixture
    def double_cover(self, field):
        cover = PolyRing(("x", "t"), field)
        return QuotientRing.from_text(cover, ["t^2 - x"], "S")

    def _generators(self, ring):
        return [ring.cover.one, ring.cover.parse("t")]

    def test_free_extension(self, line, double_cover):
        """Test k[x] -> k[x, t]/(t^2 - x), free of rank two."""
        phi = RingMap.module_finite(
            line, double_cover, self._generators(double_cover), FPModule.free(line, 2)
        )
        assert phi.kind == MapKind.MODULE_FINITE
        assert phi.extra_variables == 1
        assert phi.target_as_module().ngens == 2
        assert map_pd(phi).value == 0

    def test_missing_unit_generator(self, line, double_cover):
        """Test that 1 must be among the generators."""
        generators = [double_cover.cover.parse("t")]
        with pytest.raises(VerificationError, match="must include 1"):
            RingMap.module_finite(line, double_cover, generators, FPModule.free(line, 1))

    def test_false_relation(self, line, double_cover):
        """Test that a declared relation must hold in S."""
        presentation = FPModule.from_matrix(line, Matrix.parse(line, "x; -1"))
        with pytest.raises(VerificationError, match="relation that fails"):
            RingMap.module_finite(line, double_cover, self._generators(double_cover), presentation)

    def test_grade_profile_needs_surjection(self, line, double_cover):
        """Test that grade profiles are refused for module-finite maps."""
        phi = RingMap.module_finite(
            line, double_cover, self._generators(double_cover), FPModule.free(line, 2)
        )
        with pytest.raises(RingMismatchError, match="computed for surjections"):
            grade_profile(phi)


class TestBaseChange:
    """Tests for base change and cobase change."""

    def test_ring_base_change(self, plane, phi):
        """Test that R ⊗ S = S keeps the ring certificate."""
        result = base_change(_ring_complex(plane), phi)
        assert result.is_exact
        assert result.construction == Construction.BASE_CHANGE
        assert result.checks == {"inf": [0, 0], "amp": [0, 0]}
        assert result.to_dict()["hypothesis"] == "certified"

    def test_dualizing_base_change(self, plane, phi):
        """Test that D ⊗ S along a regular element is a shifted cover dual."""
        dual = dualizing_complex(plane)
        result = base_change(dual, phi)
        assert isinstance(result.complex, CoverDual)
        assert result.complex.offset == dual.offset + 1
        assert inf(result.complex) == inf(dual)

    def test_cobase_change(self, plane, phi):
        """Test inf RHom(S, D) = inf D - pd_R(S)."""
        result = cobase_change(dualizing_complex(plane), phi)
        assert result.construction == Construction.COBASE_CHANGE
        assert result.checks == {"inf": [2, 1], "pd": 1, "sup": 2}

    def test_cobase_needs_finite_pd(self, field):
        """Test that cobase change is refused when pd_R(S) = ∞."""
        ring = QuotientRing.from_text(PolyRing(("x",), field), ["x^2"])
        residue_map = RingMap.surjection(ring, [ring.parse("x")])
        with pytest.raises(VerificationError, match="is infinite"):
            cobase_change(_ring_complex(ring), residue_map)


class TestDescent:
    """Tests for descent of G-dimension."""

    def test_tensor_descent(self, plane, phi):
        """Test gdim_R(k) = gdim_S(k ⊗^L S) = 2."""
        report = descent_gdim(_ring_complex(plane), FPModule.residue_field(plane), phi)
        assert report.agree
        assert report.source.value == 2
        assert report.hypothesis == HypothesisStatus.CERTIFIED
        assert "gdim_S = gdim_R" in report.asserted
        assert report.to_dict()["kind"] == "tensor"

    def test_cobase_descent(self, plane, phi):
        """Test the cobase comparison records its bounds."""
        report = descent_gdim(
            dualizing_complex(plane), FPModule.residue_field(plane), phi, DescentKind.COBASE
        )
        assert report.kind == DescentKind.COBASE
        assert "gdim_S ≤ gdim_R + amp C + pd" in report.asserted


class TestSeriesTransfer:
    """Tests for Poincare and Bass series along a map."""

    def test_ring_along_hypersurface(self, plane, phi):
        """Test that I_φ = t^-1 for k[x, y] -> k[y]."""
        transfer = series_transfer(_ring_complex(plane), phi, 3)
        assert transfer.poincare_agrees
        assert transfer.bass_agrees
        assert transfer.quotient.terms == ((-1, 1),)
        assert transfer.to_dict()["N"] == 3


class TestGradeProfile:
    """Tests for grade profiles of surjections."""

    def test_hypersurface(self, plane, phi):
        """Test that k[x, y] -> k[y] is Gorenstein of grade one."""
        profile = grade_profile(phi)
        assert profile.pd == 1
        assert profile.ext_degrees == (1,)
        assert profile.cohen_macaulay
        assert profile.constant_grade
        assert profile.gorenstein
        (entry,) = profile.entries
        assert entry.grade == 1

    def test_ext_concentration(self, plane, phi):
        """Test that Ext_R^i(R/(x), C) lives in degree one for C = R and C = ω."""
        for module in (FPModule.free(plane, 1), canonical_module(plane)):
            assert ext_concentration(phi, module) == {"grade": 1, "ext_degrees": [1]}

    def test_ext_concentration_needs_cohen_macaulay(self, plane):
        """Test that R -> R/(x^2, xy), with an embedded prime, is refused."""
        embedded = RingMap.surjection(plane, [plane.parse("x^2"), plane.parse("x*y")], "psi")
        with pytest.raises(VerificationError, match="not Cohen-Macaulay"):
            ext_concentration(embedded, FPModule.free(plane, 1))

    def test_foreign_prime(self, plane, phi):
        """Test that primes must belong to the target."""
        prime = PrimeIdeal.parse(plane, ["x", "y"], "m")
        with pytest.raises(RingMismatchError, match="not a prime of the target"):
            grade_profile(phi, [prime])

    def test_fitting_ideal(self, plane):
        """Test Fitt_0(R/(x, y)) = (x, y)."""
        module = FPModule.cyclic(plane, [plane.parse("x"), plane.parse("y")])
        assert fitting_ideal(module, 0) == Ideal.parse(plane.cover, ["x", "y"])
        assert fitting_ideal(module, 1).is_unit


class TestFinitePdPartners:
    """Tests for tensoring with complexes of finite projective dimension."""

    def test_projective_dimension(self, plane, field):
        """Test pd from RHom(P, R), finite and infinite."""
        assert projective_dimension(FPModule.residue_field(plane)) == 2
        ring = QuotientRing.from_text(PolyRing(("x",), field), ["x^2"])
        with pytest.raises(VerificationError, match="not finite"):
            projective_dimension(FPModule.residue_field(ring))

    def test_amplitude_check(self, plane):
        """Test R/(x) ⊗^L k, which has homology in degrees 0 and 1."""
        cyclic = FPModule.cyclic(plane, [plane.parse("x")])
        report = amplitude_check(cyclic, FPModule.residue_field(plane))
        assert report["XP"] == [0, 1, 1]
        assert report["hypothesis"] == "certified"
        assert report["exact_iff"]
        assert report["outer"] == [0, 2]

    def test_cone_tensor_of_isomorphism(self, plane):
        """Test that the cone of 1: R -> R stays exact after ⊗ R/(y)."""
        partner = FPModule.cyclic(plane, [plane.parse("y")])
        chain_map = multiplication(_ring_complex(plane), plane.cover.one)
        report = cone_tensor_check(chain_map, partner)
        assert report == {"cone_exact": True, "tensor_cone_exact": True, "hypothesis": "certified"}

    def test_cone_tensor_of_variable(self, plane):
        """Test that the cone of x: R(-1) -> R is not exact on either side of ⊗ R/(y)."""
        partner = FPModule.cyclic(plane, [plane.parse("y")])
        report = cone_tensor_check(multiplication(_ring_complex(plane), plane.parse("x")), partner)
        assert not report["cone_exact"]
        assert not report["tensor_cone_exact"]

    def test_cone_tensor_needs_finite_pd(self, field):
        """Test that a partner of infinite projective dimension is refused."""
        ring = QuotientRing.from_text(PolyRing(("x",), field), ["x^2"])
        chain_map = multiplication(_ring_complex(ring), ring.cover.one)
        with pytest.raises(VerificationError, match="finite projective dimension"):
            cone_tensor_check(chain_map, FPModule.residue_field(ring))

    def test_tensor_gdim_bounds(self, plane):
        """Test gdim_R(R ⊗ k) = gdim_R(R) + pd k."""
        ring_complex = _ring_complex(plane)
        report = tensor_gdim_bounds(ring_complex, ring_complex, FPModule.residue_field(plane))
        assert (report["gdim_X"], report["gdim_XP"], report["pd_P"]) == (0, 2, 2)
        assert report["lower_strict"]
        assert not report["upper_strict"]

    def test_uniqueness_of_distinct_complexes(self, plane, phi):
        """Test that R and D stay apart after base change."""
        report = transfer_uniqueness(_ring_complex(plane), dualizing_complex(plane), phi)
        assert not report.sources_agree
        assert not report.targets_agree
        assert report.asserted
