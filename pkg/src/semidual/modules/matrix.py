"""
Matrices over a quotient ring R = P/I.

A Matrix is a map between free modules written target-first: `Matrix(ring,
rows, cols, columns)` sends the j-th source basis vector to `columns[j]`, a
vector of length `rows` in the target. Entries are kept as normal forms.

Text format: entries in a row separated by ";", rows separated by "|",
for example "Y; Z | 0; Y".
"""

from dataclasses import dataclass

from sympy.polys.rings import PolyElement

from semidual.errors import RingMismatchError, ScriptParseError
from semidual.logging import setup_logger
from semidual.ring import QuotientRing

logger = setup_logger()

PolyVector = tuple[PolyElement, ...]


def zero_vector(ring: QuotientRing, length: int) -> PolyVector:
    return tuple(ring.zero for _ in range(length))


def unit_vector(ring: QuotientRing, length: int, index: int) -> PolyVector:
    return tuple(ring.one if i == index else ring.zero for i in range(length))


def reduce_vector(ring: QuotientRing, vector) -> PolyVector:
    return tuple(ring.reduce(entry) for entry in vector)


def vector_is_zero(vector) -> bool:
    return not any(vector)


def add_vectors(a, b) -> PolyVector:
    return tuple(x + y for x, y in zip(a, b))


def scale_vector(coeff: PolyElement, vector) -> PolyVector:
    return tuple(coeff * x for x in vector)


def vector_degree(ring: QuotientRing, vector, twists) -> int | None:
    """Largest twisted degree among nonzero entries (the degree, when homogeneous)."""
    degrees = [ring.cover.degree(entry) + twist for entry, twist in zip(vector, twists) if entry]
    return max(degrees) if degrees else None


def vector_is_homogeneous(ring: QuotientRing, vector, twists) -> bool:
    degrees = set()
    for entry, twist in zip(vector, twists):
        for monomial in entry.itermonoms():
            degrees.add(ring.cover.monomial_degree(monomial) + twist)
    return len(degrees) <= 1


@dataclass(frozen=True, eq=False)
class Matrix:
    """A map R^cols -> R^rows, stored by columns."""

    ring: QuotientRing
    rows: int
    cols: int
    columns: tuple[PolyVector, ...]

    def __post_init__(self):
        if len(self.columns) != self.cols:
            raise ValueError(f"Expected {self.cols} columns, got {len(self.columns)}")
        normalized = []
        for column in self.columns:
            if len(column) != self.rows:
                raise ValueError(f"Column of length {len(column)} in a {self.rows}-row matrix")
            normalized.append(reduce_vector(self.ring, column))
        object.__setattr__(self, "columns", tuple(normalized))

    # --- construction ------------------------------------------------------

    @classmethod
    def zeros(cls, ring: QuotientRing, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, tuple(zero_vector(ring, rows) for _ in range(cols)))

    @classmethod
    def identity(cls, ring: QuotientRing, n: int) -> "Matrix":
        return cls(ring, n, n, tuple(unit_vector(ring, n, j) for j in range(n)))

    @classmethod
    def from_rows(cls, ring: QuotientRing, rows: list, cols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != width for r in rows):
            raise ValueError("Ragged matrix rows")
        columns = tuple(tuple(r[j] for r in rows) for j in range(width))
        return cls(ring, len(rows), width, columns)

    @classmethod
    def from_columns(cls, ring: QuotientRing, rows: int, columns: list) -> "Matrix":
        return cls(ring, rows, len(columns), tuple(tuple(c) for c in columns))

    @classmethod
    def parse(
        cls,
        ring: QuotientRing,
        text: str,
        rows: int | None = None,
        cols: int | None = None,
        line: int | None = None,
    ) -> "Matrix":
        """Parse the "a; b | c; d" matrix text format."""
        text = text.strip()
        if not text:
            return cls.zeros(ring, rows or 0, cols or 0)
        parsed_rows = []
        for row_text in text.split("|"):
            entries = [e for e in row_text.split(";")]
            parsed_rows.append(tuple(ring.parse(e.strip(), line=line) for e in entries))
        width = len(parsed_rows[0])
        if any(len(r) != width for r in parsed_rows):
            raise ScriptParseError("Matrix rows have different lengths", line=line)
        if rows is not None and rows != len(parsed_rows):
            raise ScriptParseError(f"Expected {rows} rows, got {len(parsed_rows)}", line=line)
        if cols is not None and cols != width:
            raise ScriptParseError(f"Expected {cols} columns, got {width}", line=line)
        return cls.from_rows(ring, parsed_rows)

    # --- access ------------------------------------------------------------

    def entry(self, i: int, j: int) -> PolyElement:
        return self.columns[j][i]

    def row(self, i: int) -> PolyVector:
        return tuple(column[i] for column in self.columns)

    def row_list(self) -> list[PolyVector]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _check(self, other: "Matrix"):
        if other.ring != self.ring:
            raise RingMismatchError("Matrices over different rings")

    # --- algebra -----------------------------------------------------------

    def apply(self, vector) -> PolyVector:
        """Image of a source vector."""
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} for a {self.shape} matrix")
        result = [self.ring.zero] * self.rows
        for coeff, column in zip(vector, self.columns):
            if not coeff:
                continue
            for i, entry in enumerate(column):
                if entry:
                    result[i] += coeff * entry
        return reduce_vector(self.ring, result)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        """Composition self ∘ other."""
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"Cannot compose {self.shape} with {other.shape}")
        return Matrix(self.ring, self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"Cannot add {self.shape} and {other.shape}")
        columns = tuple(add_vectors(a, b) for a, b in zip(self.columns, other.columns))
        return Matrix(self.ring, self.rows, self.cols, columns)

    def __neg__(self) -> "Matrix":
        columns = tuple(tuple(-x for x in c) for c in self.columns)
        return Matrix(self.ring, self.rows, self.cols, columns)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, coeff) -> "Matrix":
        coeff = self.ring.cover.ring(coeff)
        return Matrix(
            self.ring, self.rows, self.cols, tuple(scale_vector(coeff, c) for c in self.columns)
        )

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.ring, self.cols, self.row_list())

    def is_zero(self) -> bool:
        return all(vector_is_zero(c) for c in self.columns)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring or self.shape != other.shape:
            return False
        return self.columns == other.columns

    def __hash__(self):
        return hash((self.rows, self.cols, self.columns))

    def unit_entries(self) -> list[tuple[int, int]]:
        """Positions of entries with a nonzero constant term."""
        found = []
        for j, column in enumerate(self.columns):
            for i, entry in enumerate(column):
                if entry and self.ring.cover.constant_term(entry):
                    found.append((i, j))
        return found

    def is_minimal(self) -> bool:
        return not self.unit_entries()

    def is_homogeneous(self, target_twists, source_twists) -> bool:
        """Column j is homogeneous of degree source_twists[j] in the twisted target."""
        for column, degree in zip(self.columns, source_twists):
            for entry, twist in zip(column, target_twists):
                for monomial in entry.itermonoms():
                    if self.ring.cover.monomial_degree(monomial) + twist != degree:
                        return False
        return True

    # --- block structure ---------------------------------------------------

    def select_columns(self, indices) -> "Matrix":
        return Matrix(self.ring, self.rows, len(indices), tuple(self.columns[j] for j in indices))

    def select_rows(self, indices) -> "Matrix":
        columns = tuple(tuple(c[i] for i in indices) for c in self.columns)
        return Matrix(self.ring, len(indices), self.cols, columns)

    @staticmethod
    def hstack(ring: QuotientRing, rows: int, blocks: list["Matrix"]) -> "Matrix":
        columns = []
        for block in blocks:
            if block.rows != rows:
                raise ValueError("hstack blocks need equal row counts")
            columns.extend(block.columns)
        return Matrix(ring, rows, len(columns), tuple(columns))

    @staticmethod
    def vstack(ring: QuotientRing, cols: int, blocks: list["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        columns = []
        for j in range(cols):
            column: list = []
            for block in blocks:
                if block.cols != cols:
                    raise ValueError("vstack blocks need equal column counts")
                column.extend(block.columns[j])
            columns.append(tuple(column))
        return Matrix(ring, rows, cols, tuple(columns))

    @staticmethod
    def block(
        ring: QuotientRing, row_sizes: list[int], col_sizes: list[int], blocks: dict
    ) -> "Matrix":
        """
        Assemble a block matrix; `blocks[(r, c)]` is the block from source
        summand c to target summand r, missing blocks are zero.
        """
        row_offsets = [sum(row_sizes[:r]) for r in range(len(row_sizes))]
        rows = sum(row_sizes)
        columns = []
        for c, width in enumerate(col_sizes):
            for j in range(width):
                column = [ring.zero] * rows
                for r, height in enumerate(row_sizes):
                    block = blocks.get((r, c))
                    if block is None:
                        continue
                    if block.shape != (height, width):
                        raise ValueError(
                            f"Block {(r, c)} has shape {block.shape}, expected {(height, width)}"
                        )
                    for i in range(height):
                        column[row_offsets[r] + i] = block.columns[j][i]
                columns.append(tuple(column))
        return Matrix(ring, rows, len(columns), tuple(columns))

    @staticmethod
    def block_diagonal(ring: QuotientRing, blocks: list["Matrix"]) -> "Matrix":
        return Matrix.block(
            ring,
            [b.rows for b in blocks],
            [b.cols for b in blocks],
            {(i, i): b for i, b in enumerate(blocks)},
        )

    def repeat(self, copies: int) -> "Matrix":
        """Block diagonal with `copies` copies of this matrix."""
        return Matrix.block_diagonal(self.ring, [self] * copies)

    def expand(self, size: int) -> "Matrix":
        """
        The map (R^size)^cols -> (R^size)^rows whose (i, j) block is entry(i, j)
        times the identity; used to act on direct sums of `size`-vectors.
        """
        columns = []
        for j in range(self.cols):
            for k in range(size):
                column = [self.ring.zero] * (self.rows * size)
                for i in range(self.rows):
                    column[i * size + k] = self.entry(i, j)
                columns.append(tuple(column))
        return Matrix(self.ring, self.rows * size, self.cols * size, tuple(columns))

    def change_ring(self, ring: QuotientRing) -> "Matrix":
        """The same entries over another quotient of the same cover."""
        if ring.cover != self.ring.cover:
            raise RingMismatchError("Rings do not share a cover")
        return Matrix(ring, self.rows, self.cols, self.columns)

    # --- text --------------------------------------------------------------

    def to_text(self) -> str:
        return " | ".join(
            "; ".join(self.ring.format(entry) for entry in row) for row in self.row_list()
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}: {self.to_text()})"
