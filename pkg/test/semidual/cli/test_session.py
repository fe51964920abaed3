"""
Unit tests for the Semidual CLI session.
"""

import pytest
from semidual.cli import Report
from semidual.cli.session import Session
from semidual.errors import TheoremViolation
from semidual.modules import FPModule
from semidual.ring import PrimeIdeal, QuotientRing

PLANE = """
ring R = [x, y]
module k = R residue
complex Rc = R ranks (1)
"""


@pytest.fixture
def session():
    return Session(workers=1)


def _run(session: Session, text: str) -> list[dict]:
    report = Report(session.field_name, session.seed)
    session.run_text(text, report)
    return report.records


class TestBindings:
    """Tests for definitions and the binding table."""

    def test_definitions_emit_no_records(self, session):
        """Test that definitions only bind names."""
        assert _run(session, PLANE) == []
        assert isinstance(session.bindings["R"], QuotientRing)
        assert isinstance(session.bindings["k"], FPModule)
        assert session.bindings["Rc"].name == "Rc"

    def test_quotient_and_prime(self, session):
        """Test ring quotients and declared primes."""
        _run(session, "ring R = [x, y] / (x*y)\nring S = R / (x)\nideal p = S (x, y)")
        assert session.bindings["S"].is_zero(session.bindings["S"].parse("x"))
        assert isinstance(session.bindings["p"], PrimeIdeal)

    def test_prime_keeps_generators_in_the_defining_ideal(self, session):
        """Test that a prime generator vanishing in the quotient is kept."""
        text = "ring A = [X, Y, Z] / (Y^2, Y*Z)\nring S = A / (X)\nideal mS = S (X, Y)"
        assert _run(session, text) == []
        prime = session.bindings["mS"]
        assert len(prime.generators) == 2
        assert prime.contains(session.bindings["S"].ideal)

    def test_canonical_module(self, session):
        """Test that ω of k[x]/(x^2) is a cyclic module and a non-CM ring has none."""
        text = "\n".join(
            [
                "ring R = [x] / (x^2)",
                "module W = R canonical",
                "ring A = [Y, Z] / (Y^2, Y*Z)",
                "module V = A canonical",
            ]
        )
        (record,) = _run(session, text)
        assert session.bindings["W"].minimal_generator_count() == 1
        assert session.bindings["W"].name == "W"
        assert (record["status"], record["line"]) == ("error", 4)
        assert "no canonical module" in record["error"]
        assert "V" not in session.bindings

    def test_weights(self, session):
        """Test weighted variables."""
        _run(session, "ring R = [x, y] weights (1, 2)")
        ring = session.bindings["R"]
        assert ring.cover.degree(ring.parse("y")) == 2

    def test_rebinding_is_an_error(self, session):
        """Test that bindings are immutable."""
        (record,) = _run(session, "ring R = [x]\nring R = [y]")
        assert record["status"] == "error"
        assert record["binding"] == "R"
        assert record["line"] == 2
        assert record["command"] == "ring"
        assert session.bindings["R"].cover.names == ("x",)

    def test_unbound_name(self, session):
        """Test that commands report unknown names."""
        (record,) = _run(session, "depth Q")
        assert record["binding"] == "Q"
        assert "is not bound" in record["error"]

    def test_wrong_kind(self, session):
        """Test that a ring is not accepted where a complex is needed."""
        records = _run(session, PLANE + "gdim R k")
        assert records[0]["status"] == "error"
        assert "is a ring, expected a module or complex" in records[0]["error"]

    def test_complex_constructions(self, session):
        """Test koszul, shift, sum, cone and ranks definitions."""
        text = PLANE + "\n".join(
            [
                "module M = R / (x)",
                "module F = R ^ 1",
                "complex K = koszul R (x, y)",
                "complex S = K shift 2",
                "complex T = M + k",
                "complex A = cone F -> M [1]",
                "complex G = R ranks (1, 1) twists ((0), (1)) [x]",
            ]
        )
        assert _run(session, text) == []
        assert session.bindings["S"].lo == 2
        assert session.bindings["A"].name == "A"
        assert session.bindings["G"].is_free

    def test_map_kernel(self, session):
        """Test that a surjection reads its kernel off the target."""
        _run(session, "ring R = [x, y]\nring S = R / (x)\nmap phi = R -> S")
        phi = session.bindings["phi"]
        assert [phi.source.format(f) for f in phi.kernel] == ["x"]

    def test_module_finite_map(self, session):
        """Test a module-finite map with a free presentation."""
        text = "\n".join(
            [
                "ring R = [x]",
                "ring S = [x, t] / (t^2 - x)",
                "map phi = R -> S finite (1, t) [0; 0]",
                "pd phi",
            ]
        )
        (record,) = _run(session, text)
        assert record["status"] == "ok"
        assert record["result"]["value"] == 0


class TestCommands:
    """Tests for the commands and their records."""

    def test_record_shape(self, session):
        """Test the fields of a command record."""
        records = _run(session, PLANE + "gdim Rc k")
        assert records == [
            {
                "line": 5,
                "command": "gdim",
                "statement": "gdim Rc k",
                "status": "ok",
                "result": records[0]["result"],
            }
        ]
        assert records[0]["result"]["value"] == 2
        assert records[0]["result"]["certificate"] == "exact"

    def test_depth_and_pd(self, session):
        """Test depth and pd of k over k[x, y]."""
        depth_record, pd_record = _run(session, PLANE + "depth R\npd k")
        assert depth_record["result"] == {"depth": 2}
        assert pd_record["result"]["value"] == 2

    def test_semidual(self, session):
        """Test a rejected semidualizing candidate."""
        text = "ring R = [x] / (x^2)\nmodule k = R residue\nsemidual k"
        (record,) = _run(session, text)
        assert record["result"]["outcome"] == "no"

    def test_homology_at_primes(self, session):
        """Test localized homology at one and at two primes."""
        text = "\n".join(
            [
                "ring R = [x, y]",
                "module A = R / (x, y)",
                "module B = R / (x - 1, y)",
                "complex B1 = B shift 1",
                "complex X = A + B1",
                "ideal p = R (x, y)",
                "ideal q = R (x - 1, y)",
                "homology X at p",
                "homology X at p q",
            ]
        )
        at_p, at_both = _run(session, text)
        assert at_p["result"]["amp"] == 1
        assert at_p["result"]["localized"]["degrees"] == [0]
        assert at_both["result"]["localized"]["degrees"] == [0, 1]
        assert at_both["result"]["localized"]["at"] == ["p", "q"]

    def test_betti(self, session):
        """Test the Betti table and resolution of k over k[x, y]."""
        (record,) = _run(session, PLANE + "betti k 2")
        result = record["result"]
        assert result["betti"] == [1, 2, 1]
        assert result["graded"] == [[0, 0, 1], [1, 1, 2], [2, 2, 1]]
        assert result["resolution"]["ranks"] == [1, 2, 1]
        assert result["resolution"]["twists"] == [[0], [1, 1], [2]]

    def test_betti_needs_a_module(self, session):
        """Test that betti refuses a complex."""
        (record,) = _run(session, PLANE + "betti Rc")
        assert "expected a module" in record["error"]

    def test_series(self, session):
        """Test the P·I identity for R itself."""
        (record,) = _run(session, PLANE + "series Rc 3")
        assert record["status"] == "ok"
        assert record["result"]["identity"]
        assert record["result"]["top"] == 3

    def test_map_commands(self, session):
        """Test pd, grade-profile and base change along a map."""
        text = PLANE + "\n".join(
            [
                "ring S = R / (x)",
                "map phi = R -> S",
                "ideal n = S (x, y)",
                "pd phi",
                "grade-profile phi n",
                "basechange Rc phi",
            ]
        )
        pd_record, grade_record, change_record = _run(session, text)
        assert pd_record["result"]["value"] == 1
        assert grade_record["result"]["gorenstein"]
        assert change_record["result"]["construction"] == "base-change"

    def test_syntax_error_in_command(self, session):
        """Test that a malformed command is an error record with a column."""
        (record,) = _run(session, PLANE + "depth")
        assert record["status"] == "error"
        assert record["column"] == 6

    def test_unparseable_script(self, session):
        """Test that a script-level parse error gives a single record."""
        (record,) = _run(session, "ring R = [x\ndepth R")
        assert record["command"] is None
        assert record["script"] == "<text>"
        assert record["line"] == 1

    def test_theorem_violation_fails(self, session, monkeypatch):
        """Test that a failed theorem check is a fail record."""

        def violated(*args, **kwargs):
            raise TheoremViolation("bound exceeded")

        monkeypatch.setattr("semidual.cli.session.gdim", violated)
        records = _run(session, PLANE + "gdim Rc k")
        assert records[0]["status"] == "fail"
        assert records[0]["error"] == "bound exceeded"

    def test_errors_do_not_abort(self, session):
        """Test that the session continues after an error."""
        records = _run(session, PLANE + "depth Q\ndepth R")
        assert [r["status"] for r in records] == ["error", "ok"]

    def test_suite_records_are_prefixed(self, session, monkeypatch):
        """Test that suite records carry the statement's line."""
        monkeypatch.setattr(session, "suite_records", lambda name: [{"suite": name}])
        (record,) = _run(session, "suite all")
        assert record == {"line": 1, "command": "suite", "suite": "all"}

    def test_fuzz_arguments(self, session, monkeypatch):
        """Test that fuzz passes its count and seed through."""
        calls = []

        def fake_fuzz(tag, count, seed, field_spec, workers):
            calls.append((tag, count, seed))
            return {"fuzz": tag, "status": "pass"}

        monkeypatch.setattr("semidual.cli.session.run_fuzz", fake_fuzz)
        (record,) = _run(session, "fuzz gdim-pd 5 9")
        assert calls == [("gdim-pd", 5, 9)]
        assert record["command"] == "fuzz"
        assert record["status"] == "pass"
