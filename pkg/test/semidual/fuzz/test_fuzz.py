"""
Unit tests for the Semidual Fuzz package.
"""

import pytest
from semidual.fuzz import (
    InstanceOutcome,
    InstanceSpec,
    PartSpec,
    PropertyTag,
    build,
    check_spec,
    generate,
    parse_tag,
    run_fuzz,
    shrink,
    shrink_candidates,
)
from semidual.fuzz.properties import NEEDS_NONZERODIVISOR, PROPERTIES, PropertyFailure
from semidual.ring import make_field


@pytest.fixture
def field():
    return make_field(32003)


@pytest.fixture
def plane_spec():
    """R = k[x, y]/(x^2), X = Σ^1 R/(x), P = R/(y)."""
    return InstanceSpec(2, ((2, 0),), (PartSpec(((1, 0),), 1),))


def _always_failing(tag, spec, field):
    return InstanceOutcome.FAILED, f"{spec.nvars} variables"


class TestTags:
    """Tests for property tags."""

    def test_parse(self):
        """Test known and unknown tags."""
        assert parse_tag("gdim-pd") == PropertyTag.GDIM_PD
        with pytest.raises(ValueError, match="Unknown property tag 'gdim'"):
            parse_tag("gdim")

    def test_short_names(self):
        """Test the alternate names of three tags."""
        assert parse_tag("thm4_2c") == PropertyTag.TENSOR_BOUNDS
        assert parse_tag("lem2_2") == PropertyTag.GDIM_SUP_BOUND
        assert parse_tag("prop3_8") == PropertyTag.GDIM_PD

    def test_every_tag_has_a_property(self):
        """Test that each tag maps to a property check."""
        assert set(PROPERTIES) == set(PropertyTag)
        assert PropertyTag.CONE_TENSOR in NEEDS_NONZERODIVISOR
        assert parse_tag("semidualizing-pairs") == PropertyTag.SEMIDUALIZING_PAIRS

    def test_negated(self):
        """Test that only the mutated statement is negated."""
        assert [t for t in PropertyTag if t.negated] == [PropertyTag.BROKEN_SUP_BOUND]


class TestGenerators:
    """Tests for instance generation, description and shrinking."""

    def test_deterministic(self):
        """Test that an instance depends only on seed, tag and index."""
        first = generate(PropertyTag.GDIM_SUP_BOUND, 7, 3)
        assert generate(PropertyTag.GDIM_SUP_BOUND, 7, 3) == first
        assert [generate(PropertyTag.GDIM_SUP_BOUND, 7, i) for i in range(3)] == [
            generate(PropertyTag.GDIM_SUP_BOUND, 7, i) for i in range(3)
        ]

    def test_nonzerodivisor_rings(self):
        """Test that nzd tags keep the last variable out of the relations."""
        tag = next(iter(NEEDS_NONZERODIVISOR))
        for index in range(20):
            spec = generate(tag, 1, index)
            assert all(m[-1] == 0 for m in spec.ring_relations)

    def test_bounds(self):
        """Test the size limits of generated instances."""
        for index in range(20):
            spec = generate(PropertyTag.AUSLANDER_BASS, 0, index)
            assert 1 <= spec.nvars <= 3
            assert 1 <= len(spec.parts) <= 2
            assert len(spec.koszul) == 3

    def test_describe(self, plane_spec):
        """Test the printed form of an instance."""
        assert plane_spec.describe() == "R = k[x, y]/(x^2); X = Σ^1 R/(x); P = R/(y)"

    def test_shrink_candidates(self, plane_spec):
        """Test that each candidate drops one relation or shift."""
        candidates = list(shrink_candidates(plane_spec))
        assert [c.describe() for c in candidates] == [
            "R = k[x, y]; X = Σ^1 R/(x); P = R/(y)",
            "R = k[x, y]/(x^2); X = Σ^1 R; P = R/(y)",
            "R = k[x, y]/(x^2); X = R/(x); P = R/(y)",
        ]

    def test_build(self, plane_spec, field):
        """Test realizing an instance over a field."""
        instance = build(plane_spec, field)
        assert instance.ring.cover.names == ("x", "y")
        assert instance.complex.lo == 1
        assert instance.partner.module(0).ngens == 1
        assert instance.ring.format(instance.element) == "y"


class TestProperties:
    """Tests for single property checks."""

    def test_broken_statement_fails(self, field):
        """Test that sup R ≤ gdim_D(R) - 1 is refuted over k[x]."""
        spec = InstanceSpec(1, (), (PartSpec(),))
        outcome, message = check_spec(PropertyTag.BROKEN_SUP_BOUND, spec, field)
        assert outcome == InstanceOutcome.FAILED
        assert "gdim - 1" in message

    def test_gdim_pd_holds(self, field):
        """Test gdim_R(R/(y)) = gdim_D(R/(y)) = pd = 1 over k[x, y]."""
        spec = InstanceSpec(2, (), (PartSpec(),))
        assert check_spec(PropertyTag.GDIM_PD, spec, field) == (InstanceOutcome.PASSED, "")

    def test_standard_morphisms_hold(self, field):
        """Test the evaluation and adjunction comparisons on K(x), Σ K(y) and K(x, y)."""
        spec = InstanceSpec(
            2,
            (),
            (PartSpec(),),
            koszul=(((1, 0),), ((0, 1),), ((1, 0), (0, 1))),
            koszul_shifts=(0, 1, 0),
        )
        outcome = check_spec(PropertyTag.STANDARD_MORPHISMS, spec, field)
        assert outcome == (InstanceOutcome.PASSED, "")

    def test_cone_tensor_holds(self, field):
        """Test multiplication by 1, 0 and y on R ⊗ R/(y) over k[x, y]."""
        spec = InstanceSpec(2, (), (PartSpec(),))
        assert check_spec(PropertyTag.CONE_TENSOR, spec, field) == (InstanceOutcome.PASSED, "")

    def test_semidualizing_pairs_hold(self, field):
        """Test the pair checks for D and R over k[x]/(x^2)."""
        spec = InstanceSpec(1, ((2,),), (PartSpec(),))
        outcome, _ = check_spec(PropertyTag.SEMIDUALIZING_PAIRS, spec, field)
        assert outcome != InstanceOutcome.FAILED

    def test_failure_type(self):
        """Test that property failures are assertion errors."""
        assert issubclass(PropertyFailure, AssertionError)


class TestRunFuzz:
    """Tests for run_fuzz."""

    def test_empty_run(self):
        """Test a run of zero instances."""
        record = run_fuzz("gdim-pd", 0, 5, workers=1)
        assert record == {
            "fuzz": "gdim-pd",
            "count": 0,
            "seed": 5,
            "passed": 0,
            "failed": 0,
            "skipped": 0,
            "negated": False,
            "counterexample": None,
            "status": "pass",
        }

    def test_negated_needs_counterexample(self):
        """Test that a negated tag without a counterexample fails."""
        assert run_fuzz(PropertyTag.BROKEN_SUP_BOUND, 0, workers=1)["status"] == "fail"

    def test_negative_count(self):
        """Test that the count must be non-negative."""
        with pytest.raises(ValueError, match="non-negative"):
            run_fuzz("gdim-pd", -1)

    def test_counterexample(self, monkeypatch):
        """Test tallies, the first failing index and the shrunk instance."""
        monkeypatch.setattr("semidual.fuzz.runner.check_spec", _always_failing)
        record = run_fuzz("gdim-sup-bound", 4, 2, workers=2)
        assert record["failed"] == 4
        assert record["status"] == "fail"
        assert record["counterexample"]["index"] == 0
        assert "R/(" not in record["counterexample"]["instance"].split("; P")[0]

    def test_negated_counterexample_passes(self, monkeypatch):
        """Test that finding a counterexample to a negated tag passes."""
        monkeypatch.setattr("semidual.fuzz.runner.check_spec", _always_failing)
        record = run_fuzz("broken-sup-bound", 2, workers=1)
        assert record["negated"]
        assert record["status"] == "pass"

    def test_worker_count_does_not_matter(self, monkeypatch):
        """Test that records agree across pool sizes."""

        def by_size(tag, spec, field):
            if spec.nvars == 3:
                return InstanceOutcome.SKIPPED, "too big"
            return InstanceOutcome.PASSED, ""

        monkeypatch.setattr("semidual.fuzz.runner.check_spec", by_size)
        assert run_fuzz("tensor-bounds", 8, 3, workers=1) == run_fuzz(
            "tensor-bounds", 8, 3, workers=4
        )

    def test_shrink_stops(self, plane_spec, field, monkeypatch):
        """Test that shrinking ends at an instance with nothing left to drop."""
        monkeypatch.setattr("semidual.fuzz.runner.check_spec", _always_failing)
        smallest, message = shrink(PropertyTag.GDIM_PD, plane_spec, "start", field)
        assert list(shrink_candidates(smallest)) == []
        assert message == "2 variables"
