"""
Session: executes script statements against named bindings.

Bindings are immutable: a name is bound once per session, and every
definition builds a new value. Definitions emit no record; each command
emits one record (a `suite all` command emits one per suite):

    {"line": 12, "command": "gdim", "statement": "gdim D X",
     "status": "ok", "result": {...}}

Errors never abort the session. A BindingError or an engine ValueError
gives status `error`, a TheoremViolation gives status `fail`.
"""

from dataclasses import replace
from pathlib import Path
from typing import Any, Callable

from semidual.basechange import (
    DescentKind,
    MapKind,
    RingMap,
    base_change,
    cobase_change,
    descent_gdim,
    grade_profile,
    map_pd,
    projective_dimension,
    series_transfer,
)
from semidual.complexes import (
    complex_from_dict,
    complex_to_dict,
    cone,
    direct_sum,
    homology_summary,
    inf_sup_amp,
    koszul,
    localized_amp,
    localized_degrees,
    localized_inf,
    localized_sup,
)
from semidual.derived import (
    as_complex,
    bass_series,
    depth,
    derived_tensor,
    module_representative,
    poincare_series,
    rhom,
    series_identity,
)
from semidual.duality import (
    canonical_module,
    certification,
    certify,
    dualizing_complex,
    gdim,
    is_semidualizing,
)
from semidual.errors import (
    BindingError,
    ScriptParseError,
    TheoremViolation,
    UnsupportedRingError,
)
from semidual.fuzz import DEFAULT_COUNT, run_fuzz
from semidual.logging import setup_logger
from semidual.modules import (
    ChainMap,
    FPModule,
    HomologicalObject,
    Matrix,
    ModuleComplex,
    betti_numbers,
    graded_betti_numbers,
    minimal_free_resolution,
    pd,
)
from semidual.ring import (
    Ideal,
    Localization,
    PolyRing,
    PrimeIdeal,
    QuotientRing,
    field_descriptor,
    make_field,
)
from semidual.settings import suites_dir as default_suites_dir
from semidual.suites import SuiteManager, run_suites

from .enums import Keyword, Outcome
from .report import Report
from .script import ScriptParser, Statement, Token

logger = setup_logger()

DEFAULT_SERIES_TOP = 4
DEFAULT_BETTI_TOP = 3

_KIND_NAMES = (
    (QuotientRing, "ring"),
    (PrimeIdeal, "ideal"),
    (FPModule, "module"),
    (HomologicalObject, "complex"),
    (RingMap, "map"),
)


def _kind_name(value) -> str:
    return next((name for kind, name in _KIND_NAMES if isinstance(value, kind)), "value")


class _Cursor:
    """Sequential access to a statement's tokens with positioned errors."""

    def __init__(self, statement: Statement):
        self.tokens = statement.tokens
        self.line = statement.line
        self.end = len(statement.text.split("#", 1)[0].rstrip()) + 1
        self.index = 0

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def at(self, text: str) -> bool:
        token = self.peek()
        return token is not None and token.kind in ("word", "op") and token.text == text

    def optional(self, text: str) -> bool:
        if self.at(text):
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.optional(text):
            self.fail(f"Expected {text!r}")

    def take(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token is None:
            raise ScriptParseError(f"Expected {what}", self.line, self.end)
        if token.kind != kind:
            message = f"Expected {what}, found {token.text!r}"
            raise ScriptParseError(message, self.line, token.column)
        self.index += 1
        return token

    def integer(self, what: str) -> int:
        return int(self.take("number", what).text)

    def optional_integer(self) -> int | None:
        token = self.peek()
        if token is not None and token.kind == "number":
            self.index += 1
            return int(token.text)
        return None

    def fail(self, message: str):
        token = self.peek()
        raise ScriptParseError(message, self.line, token.column if token else self.end)

    def done(self) -> None:
        token = self.peek()
        if token is not None:
            raise ScriptParseError(f"Unexpected {token.text!r}", self.line, token.column)


class Session:
    """Named rings, ideals, modules, complexes and maps, and the commands over them."""

    def __init__(
        self,
        field_spec=None,
        window: int | None = None,
        seed: int = 0,
        suites_dir: str | Path | None = None,
        workers: int | None = None,
    ):
        self.field = make_field(field_spec)
        self.field_name = field_descriptor(self.field)
        self.window = window
        self.seed = seed
        self.suites_dir = Path(suites_dir) if suites_dir else default_suites_dir()
        self.workers = workers
        self.parser = ScriptParser()
        self.bindings: dict[str, Any] = {}
        self._definitions: dict[Keyword, Callable[[Statement], Any]] = {
            Keyword.RING: self._define_ring,
            Keyword.IDEAL: self._define_ideal,
            Keyword.MODULE: self._define_module,
            Keyword.COMPLEX: self._define_complex,
            Keyword.MAP: self._define_map,
        }
        self._commands: dict[Keyword, Callable[[Statement], list[dict]]] = {
            Keyword.GDIM: self._gdim,
            Keyword.SEMIDUAL: self._semidual,
            Keyword.BASECHANGE: self._basechange,
            Keyword.COBASE: self._cobase,
            Keyword.DESCENT: self._descent,
            Keyword.SERIES: self._series,
            Keyword.GRADE_PROFILE: self._grade_profile,
            Keyword.DEPTH: self._depth,
            Keyword.PD: self._pd,
            Keyword.BETTI: self._betti,
            Keyword.HOMOLOGY: self._homology,
            Keyword.SUITE: self._suite,
            Keyword.FUZZ: self._fuzz,
        }
        logger.info(f"Session over F_{self.field_name}, seed {seed}, window {window}")

    # --- running -----------------------------------------------------------

    def run_script(self, script_path: str, report: Report) -> None:
        try:
            statements = self.parser.parse_file(script_path)
        except ScriptParseError as error:
            logger.error(f"{script_path}: {error}")
            report.add(self._parse_error(script_path, error))
            return
        self.run(statements, report)

    def run_text(self, text: str, report: Report) -> None:
        try:
            statements = self.parser.parse_text(text)
        except ScriptParseError as error:
            report.add(self._parse_error("<text>", error))
            return
        self.run(statements, report)

    def run(self, statements: list[Statement], report: Report) -> None:
        for statement in statements:
            report.extend(self.execute(statement))

    def execute(self, statement: Statement) -> list[dict]:
        try:
            if statement.keyword.binds:
                self._bind(statement)
                return []
            return self._commands[statement.keyword](statement)
        except BindingError as error:
            logger.error(f"Line {statement.line}: {error}")
            return [self._record(statement, Outcome.ERROR, error=str(error), binding=error.name)]
        except TheoremViolation as error:
            logger.error(f"Line {statement.line}: theorem check failed: {error}")
            return [self._record(statement, Outcome.FAIL, error=str(error))]
        except ScriptParseError as error:
            logger.error(f"Line {statement.line}: {error}")
            return [self._record(statement, Outcome.ERROR, error=str(error), column=error.column)]
        except (ValueError, ArithmeticError, OSError) as error:
            logger.error(f"Line {statement.line}: {error}")
            return [self._record(statement, Outcome.ERROR, error=str(error))]

    def suite_records(self, name: str) -> list[dict]:
        suites = SuiteManager(self.suites_dir).load(name)
        return run_suites(suites, self.field_name, self.workers)

    def fuzz_record(self, tag: str, count: int = DEFAULT_COUNT, seed: int | None = None) -> dict:
        seed = self.seed if seed is None else seed
        return run_fuzz(tag, count, seed, self.field_name, self.workers)

    # --- records -----------------------------------------------------------

    def _record(self, statement: Statement, status: Outcome, result=None, **extra) -> dict:
        record = {
            "line": statement.line,
            "command": statement.keyword.value,
            "statement": statement.describe(),
            "status": status.value,
        }
        if result is not None:
            record["result"] = result
        record.update(extra)
        return record

    def _ok(self, statement: Statement, result: dict) -> list[dict]:
        return [self._record(statement, Outcome.OK, result)]

    @staticmethod
    def _parse_error(source: str, error: ScriptParseError) -> dict:
        return {
            "script": source,
            "line": error.line,
            "column": error.column,
            "command": None,
            "status": Outcome.ERROR.value,
            "error": error.detail,
        }

    # --- bindings ----------------------------------------------------------

    def _bind(self, statement: Statement) -> None:
        name = statement.name
        if name in self.bindings:
            raise BindingError(name, "already bound; bindings are immutable")
        value = self._definitions[statement.keyword](statement)
        self.bindings[name] = value
        logger.debug(f"Bound {name} as a {_kind_name(value)}")

    def _binding(self, token: Token) -> Any:
        if token.text not in self.bindings:
            raise BindingError(token.text, "is not bound")
        return self.bindings[token.text]

    def _typed(self, token: Token, kind, label: str) -> Any:
        value = self._binding(token)
        if not isinstance(value, kind):
            raise BindingError(token.text, f"is a {_kind_name(value)}, expected a {label}")
        return value

    def _ring(self, cursor: _Cursor) -> QuotientRing:
        return self._typed(cursor.take("word", "a ring name"), QuotientRing, "ring")

    def _map(self, cursor: _Cursor) -> RingMap:
        return self._typed(cursor.take("word", "a map name"), RingMap, "map")

    def _module(self, cursor: _Cursor) -> FPModule:
        return self._typed(cursor.take("word", "a module name"), FPModule, "module")

    def _prime(self, cursor: _Cursor) -> PrimeIdeal:
        return self._typed(cursor.take("word", "an ideal name"), PrimeIdeal, "ideal")

    def _object(self, cursor: _Cursor):
        """A module or a complex."""
        token = cursor.take("word", "a module or complex name")
        return self._typed(token, (FPModule, HomologicalObject), "module or complex")

    @staticmethod
    def _polys(ring, token: Token) -> list:
        """Polynomials of a parenthesized list; `ring` is a PolyRing or a QuotientRing."""
        return [ring.parse(text, token.line, column - 1) for text, column in token.items()]

    @staticmethod
    def _matrix(ring: QuotientRing, token: Token, rows=None, cols=None) -> Matrix:
        return Matrix.parse(ring, token.text, rows, cols, token.line)

    # --- definitions -------------------------------------------------------

    def _define_ring(self, statement: Statement) -> QuotientRing:
        cursor = _Cursor(statement)
        head = cursor.peek()
        if head is not None and head.kind == "word":
            base = self._ring(cursor)
            cursor.expect("/")
            relations = self._polys(base, cursor.take("group", "(relations)"))
            cursor.done()
            return base.quotient(relations, statement.name)

        names = tuple(text for text, _ in cursor.take("matrix", "[variables]").items())
        weights = ()
        if cursor.optional("weights"):
            group = cursor.take("group", "(weights)")
            try:
                weights = tuple(int(text) for text, _ in group.items())
            except ValueError:
                raise ScriptParseError("Weights must be integers", statement.line, group.column)
        cover = PolyRing(names, self.field, weights)
        relations = []
        if cursor.optional("/"):
            relations = self._polys(cover, cursor.take("group", "(relations)"))
        cursor.done()
        return QuotientRing(cover, Ideal(cover, tuple(relations)), statement.name)

    def _define_ideal(self, statement: Statement) -> PrimeIdeal:
        cursor = _Cursor(statement)
        ring = self._ring(cursor)
        generators = self._polys(ring.cover, cursor.take("group", "(generators)"))
        cursor.done()
        return PrimeIdeal(ring, tuple(generators), statement.name)

    def _define_module(self, statement: Statement) -> FPModule:
        cursor = _Cursor(statement)
        token = cursor.take("word", "a ring or module name")
        value = self._binding(token)
        name = statement.name

        if isinstance(value, FPModule):
            parts = [value]
            while cursor.optional("+"):
                parts.append(self._module(cursor))
            cursor.done()
            return replace(parts[0].direct_sum(*parts[1:]), name=name)

        ring = self._typed(token, QuotientRing, "ring or module")
        if cursor.optional("/"):
            generators = self._polys(ring, cursor.take("group", "(generators)"))
            module = FPModule.cyclic(ring, generators, name=name)
        elif cursor.optional("^"):
            module = FPModule.free(ring, cursor.integer("a rank"), name)
        elif cursor.optional("residue"):
            module = replace(FPModule.residue_field(ring), name=name)
        elif cursor.optional("canonical"):
            canonical = canonical_module(ring)
            if canonical is None:
                raise ValueError(f"{ring.describe()} is not Cohen-Macaulay; no canonical module")
            module = replace(canonical, name=name)
        elif cursor.optional("coker"):
            matrix = self._matrix(ring, cursor.take("matrix", "[presentation]"))
            module = FPModule.from_matrix(ring, matrix, name=name)
        else:
            cursor.fail("Expected '/', '^', 'residue', 'canonical' or 'coker'")
        cursor.done()
        return module

    def _define_complex(self, statement: Statement) -> HomologicalObject:
        cursor = _Cursor(statement)
        if cursor.optional("dualizing"):
            ring = self._ring(cursor)
            normalize = not cursor.optional("unnormalized")
            offset = cursor.integer("a shift") if cursor.optional("shift") else None
            cursor.done()
            result = dualizing_complex(ring, normalize, offset)
        elif cursor.optional("koszul"):
            ring = self._ring(cursor)
            elements = self._polys(ring, cursor.take("group", "(elements)"))
            cursor.done()
            result = koszul(ring, elements)
        elif cursor.optional("tensor"):
            first, second = self._object(cursor), self._object(cursor)
            cursor.done()
            result = as_complex(derived_tensor(first, second))
        elif cursor.optional("rhom"):
            first, second = self._object(cursor), self._object(cursor)
            cursor.done()
            result = as_complex(rhom(first, second, self.window))
        elif cursor.optional("basechange") or cursor.optional("cobase"):
            functor = base_change if statement.tokens[0].text == "basechange" else cobase_change
            source, phi = self._object(cursor), self._map(cursor)
            cursor.done()
            result = as_complex(functor(source, phi).complex)
        elif cursor.optional("cone"):
            result = self._cone(cursor)
        else:
            result = self._complex_from_binding(cursor)
        result.name = statement.name
        return result

    def _cone(self, cursor: _Cursor) -> ModuleComplex:
        source = self._representative(self._object(cursor))
        cursor.expect("->")
        target = self._representative(self._object(cursor))
        lo = min(source.lo, target.lo)
        components = {}
        degree = lo
        while cursor.peek() is not None:
            token = cursor.take("matrix", "[component]")
            rows, cols = target.module(degree).ngens, source.module(degree).ngens
            components[degree] = self._matrix(source.ring, token, rows, cols)
            degree += 1
        return cone(ChainMap(source, target, components))

    def _complex_from_binding(self, cursor: _Cursor) -> HomologicalObject:
        token = cursor.take("word", "a construction, ring, module or complex")
        value = self._binding(token)
        if isinstance(value, QuotientRing):
            cursor.expect("ranks")
            return self._complex_from_ranks(value, cursor)
        value = as_complex(self._typed(token, (FPModule, HomologicalObject), "module or complex"))
        if cursor.optional("shift"):
            k = cursor.integer("a shift")
            cursor.done()
            return self._shifted(value, k)
        parts = [value]
        while cursor.optional("+"):
            parts.append(as_complex(self._object(cursor)))
        cursor.done()
        if len(parts) == 1:
            return self._shifted(value, 0)
        return direct_sum(*[self._representative(p) for p in parts])

    @staticmethod
    def _shifted(value, k: int):
        """Σ^k of a complex; a certified semidualizing complex stays certified."""
        shifted = value.shift(k)
        construction = certification(value)
        return certify(shifted, construction) if construction is not None else shifted

    def _complex_from_ranks(self, ring: QuotientRing, cursor: _Cursor) -> ModuleComplex:
        """`R ranks (r_lo, ...) [twists ((t, ...), ...)] [from LO] [∂_lo+1] ...`"""
        ranks_token = cursor.take("group", "(ranks)")
        try:
            ranks = [int(text) for text, _ in ranks_token.items()]
        except ValueError:
            raise ScriptParseError("Ranks must be integers", cursor.line, ranks_token.column)
        data: dict[str, Any] = {"ranks": ranks}
        if cursor.optional("twists"):
            twists_token = cursor.take("group", "(twists)")
            try:
                data["twists"] = [
                    [int(t) for t in text.strip("()").split(",") if t.strip()]
                    for text, _ in twists_token.items()
                ]
            except ValueError:
                raise ScriptParseError("Twists must be integers", cursor.line, twists_token.column)
        data["lo"] = cursor.integer("the lowest degree") if cursor.optional("from") else 0
        differentials = []
        while cursor.peek() is not None:
            differentials.append(cursor.take("matrix", "[differential]").text)
        data["differentials"] = differentials
        return complex_from_dict(ring, data)

    @staticmethod
    def _representative(value) -> ModuleComplex:
        complex_ = as_complex(value)
        representative = module_representative(complex_)
        if representative is None:
            raise UnsupportedRingError(f"{complex_.label()} has no R-module model")
        return representative

    def _define_map(self, statement: Statement) -> RingMap:
        cursor = _Cursor(statement)
        source = self._ring(cursor)
        cursor.expect("->")
        target = self._ring(cursor)
        if not cursor.optional("finite"):
            cursor.done()
            kernel = tuple(g for g in target.ideal.generators if not source.ideal.contains(g))
            return RingMap(source, target, MapKind.SURJECTION, kernel, name=statement.name)
        generators = self._polys(target, cursor.take("group", "(generators)"))
        presentation = FPModule.from_matrix(
            source,
            self._matrix(source, cursor.take("matrix", "[presentation]"), cols=len(generators)),
            name=f"{target.name or 'S'} over {source.name or 'R'}",
        )
        cursor.done()
        return RingMap.module_finite(source, target, generators, presentation, statement.name)

    # --- commands ----------------------------------------------------------

    def _gdim(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        semidualizing, source = self._object(cursor), self._object(cursor)
        cursor.done()
        return self._ok(statement, gdim(semidualizing, source, self.window).to_dict())

    def _semidual(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        candidate = self._object(cursor)
        cursor.done()
        return self._ok(statement, is_semidualizing(candidate, self.window).to_dict())

    def _basechange(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        source, phi = self._object(cursor), self._map(cursor)
        cursor.done()
        return self._ok(statement, base_change(source, phi).to_dict())

    def _cobase(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        source, phi = self._object(cursor), self._map(cursor)
        cursor.done()
        return self._ok(statement, cobase_change(source, phi).to_dict())

    def _descent(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        semidualizing, source, phi = self._object(cursor), self._object(cursor), self._map(cursor)
        kind = DescentKind.COBASE if cursor.optional("cobase") else DescentKind.TENSOR
        cursor.done()
        return self._ok(statement, descent_gdim(semidualizing, source, phi, kind).to_dict())

    def _series(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        semidualizing = self._object(cursor)
        token = cursor.peek()
        phi = self._map(cursor) if token is not None and token.kind == "word" else None
        top = cursor.optional_integer()
        top = DEFAULT_SERIES_TOP if top is None else top
        cursor.done()
        if top < 0:
            raise ValueError(f"Series cutoff must be non-negative, got {top}")
        if phi is not None:
            return self._ok(statement, series_transfer(semidualizing, phi, top).to_dict())

        product, ring_series, holds = series_identity(semidualizing, top)
        result = {
            "top": top,
            "poincare": poincare_series(semidualizing, top).to_dict(),
            "bass": bass_series(semidualizing, top).to_dict(),
            "product": product.to_dict(),
            "ring_bass": ring_series.to_dict(),
            "identity": holds,
        }
        try:
            accepted = is_semidualizing(semidualizing, self.window).accepted
        except UnsupportedRingError:
            accepted = False
        status = Outcome.FAIL if accepted and not holds else Outcome.OK
        if status == Outcome.FAIL:
            logger.error(f"Line {statement.line}: P·I differs from I_R for an accepted C")
        return [self._record(statement, status, result)]

    def _grade_profile(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        phi = self._map(cursor)
        primes = []
        while cursor.peek() is not None:
            primes.append(self._prime(cursor))
        return self._ok(statement, grade_profile(phi, primes or None).to_dict())

    def _depth(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        token = cursor.take("word", "a ring, module or complex name")
        value = self._typed(token, (QuotientRing, FPModule, HomologicalObject), "ring or module")
        cursor.done()
        return self._ok(statement, {"depth": depth(value).to_json()})

    def _pd(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        token = cursor.take("word", "a module, complex or map name")
        value = self._typed(token, (FPModule, HomologicalObject, RingMap), "module or map")
        cursor.done()
        if isinstance(value, RingMap):
            return self._ok(statement, map_pd(value).to_dict())
        if isinstance(value, FPModule):
            return self._ok(statement, pd(value).to_dict())
        return self._ok(statement, {"value": projective_dimension(value).to_json()})

    def _betti(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        module = self._module(cursor)
        top = cursor.optional_integer()
        top = DEFAULT_BETTI_TOP if top is None else top
        cursor.done()
        table = graded_betti_numbers(module, top)
        result = {
            "top": top,
            "betti": betti_numbers(module, top),
            "graded": [[i, j, count] for (i, j), count in sorted(table.items())],
            "resolution": complex_to_dict(minimal_free_resolution(module, top)),
        }
        return self._ok(statement, result)

    def _homology(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        complex_ = as_complex(self._object(cursor))
        low, high, width = inf_sup_amp(complex_)
        result = {
            "inf": low.to_json(),
            "sup": high.to_json(),
            "amp": width.to_json(),
            "homology": homology_summary(complex_),
        }
        if cursor.optional("at"):
            primes = [self._prime(cursor)]
            while cursor.peek() is not None:
                primes.append(self._prime(cursor))
            where = primes[0] if len(primes) == 1 else Localization(complex_.ring, tuple(primes))
            result["localized"] = {
                "at": [p.label for p in primes],
                "degrees": localized_degrees(complex_, where),
                "inf": localized_inf(complex_, where).to_json(),
                "sup": localized_sup(complex_, where).to_json(),
                "amp": localized_amp(complex_, where).to_json(),
            }
        cursor.done()
        return self._ok(statement, result)

    def _suite(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        name = cursor.take("word", "a suite name").text
        cursor.done()
        records = self.suite_records(name)
        return [{"line": statement.line, "command": "suite", **record} for record in records]

    def _fuzz(self, statement: Statement) -> list[dict]:
        cursor = _Cursor(statement)
        tag = cursor.take("word", "a property tag").text
        count = cursor.optional_integer()
        seed = cursor.optional_integer()
        cursor.done()
        record = self.fuzz_record(tag, DEFAULT_COUNT if count is None else count, seed)
        return [{"line": statement.line, "command": "fuzz", **record}]
