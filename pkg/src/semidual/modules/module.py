"""
Finitely presented modules over a quotient ring.

An FPModule is coker(R^r -> R^g): `twists` are the degrees of the g
generators and every relation is a vector of length g (a row of the
presentation matrix). Relations are stored as normal forms with zero rows
dropped.
"""

from dataclasses import dataclass

from semidual.errors import RingMismatchError, UnsupportedRingError
from semidual.logging import setup_logger
from semidual.memo import memoized
from semidual.ring import Ideal, QuotientRing

from .matrix import (
    Matrix,
    PolyVector,
    reduce_vector,
    unit_vector,
    vector_degree,
    vector_is_homogeneous,
    vector_is_zero,
)
from .submodule import (
    Membership,
    SubmoduleEngine,
    kernel,
    select_generators,
    syzygy_presentation,
)

logger = setup_logger()


@dataclass(frozen=True, eq=False)
class FPModule:
    """coker of the relation rows, generated in degrees `twists`."""

    ring: QuotientRing
    twists: tuple[int, ...]
    relations: tuple[PolyVector, ...] = ()
    name: str = ""

    def __post_init__(self):
        twists = tuple(int(t) for t in self.twists)
        rows = []
        for relation in self.relations:
            if len(relation) != len(twists):
                raise ValueError(
                    f"Relation of length {len(relation)} for a module with {len(twists)} generators"
                )
            vector = reduce_vector(self.ring, relation)
            if not vector_is_zero(vector):
                rows.append(vector)
        object.__setattr__(self, "twists", twists)
        object.__setattr__(self, "relations", tuple(rows))

    # --- construction ------------------------------------------------------

    @classmethod
    def free(cls, ring: QuotientRing, twists=(0,), name: str = "") -> "FPModule":
        if isinstance(twists, int):
            twists = (0,) * twists
        return cls(ring, tuple(twists), (), name)

    @classmethod
    def zero(cls, ring: QuotientRing) -> "FPModule":
        return cls(ring, (), (), "0")

    @classmethod
    def cyclic(cls, ring: QuotientRing, generators, twist: int = 0, name: str = "") -> "FPModule":
        """R/J(-twist) for J generated by `generators` (cover polynomials)."""
        return cls(ring, (twist,), tuple((g,) for g in generators), name)

    @classmethod
    def residue_field(cls, ring: QuotientRing) -> "FPModule":
        """k = R/m for the irrelevant ideal m."""
        if not ring.graded_local:
            raise UnsupportedRingError(
                f"{ring.describe()} is not graded-local; the residue field is not canonical"
            )
        return cls.cyclic(ring, ring.cover.gens, name="k")

    @classmethod
    def from_matrix(cls, ring: QuotientRing, presentation: Matrix, twists=None, name: str = ""):
        """Module presented by a matrix whose rows are relations."""
        twists = tuple(twists) if twists is not None else (0,) * presentation.cols
        return cls(ring, twists, tuple(presentation.row_list()), name)

    # --- basic data --------------------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self.twists)

    def presentation_matrix(self) -> Matrix:
        """Rows are relations, columns are generators."""
        return Matrix.from_rows(self.ring, list(self.relations), self.ngens)

    def label(self) -> str:
        return self.name or f"coker({self.ngens} gens, {len(self.relations)} rels)"

    def describe(self) -> str:
        rows = " | ".join("; ".join(self.ring.format(e) for e in r) for r in self.relations)
        return f"{self.label()} twists={list(self.twists)} rels=[{rows}]"

    @property
    def is_free(self) -> bool:
        return not self.relations

    @property
    def is_graded(self) -> bool:
        if not self.ring.graded:
            return False
        return all(vector_is_homogeneous(self.ring, r, self.twists) for r in self.relations)

    def generator(self, index: int) -> PolyVector:
        return unit_vector(self.ring, self.ngens, index)

    def generators(self) -> list[PolyVector]:
        return [self.generator(i) for i in range(self.ngens)]

    @memoized
    def membership(self) -> Membership:
        """Groebner basis of the relation module (plus I), for zero tests."""
        return Membership(self.ring, self.twists, self.relations)

    def is_zero_element(self, vector) -> bool:
        return self.membership().contains(vector)

    def normal_form(self, vector) -> PolyVector:
        return reduce_vector(self.ring, self.membership().normal_form(vector))

    # --- generators --------------------------------------------------------

    @memoized
    def minimal_generators(self) -> tuple[PolyVector, ...]:
        """Minimal generators over a graded-local ring; an irredundant pruned set otherwise."""
        return tuple(select_generators(self.ring, self.generators(), self.relations, self.twists))

    def minimal_generator_count(self) -> int:
        return len(self.minimal_generators())

    def is_zero(self) -> bool:
        return all(self.is_zero_element(g) for g in self.generators())

    @memoized
    def minimized(self) -> "FPModule":
        """The same module presented on its minimal generators."""
        generators = list(self.minimal_generators())
        if not generators:
            return FPModule.zero(self.ring)
        relations, degrees = syzygy_presentation(self.ring, generators, self.relations, self.twists)
        return FPModule(self.ring, degrees, tuple(relations), self.name)

    def pruned(self) -> "FPModule":
        """Remove generators that a relation with a constant coefficient eliminates."""
        twists = list(self.twists)
        relations = [list(r) for r in self.relations]
        while True:
            pivot = None
            for r_index, relation in enumerate(relations):
                for g_index, entry in enumerate(relation):
                    if entry and entry.is_ground:
                        pivot = (r_index, g_index)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            r_index, g_index = pivot
            row = relations.pop(r_index)
            inverse = self.ring.field.quo(self.ring.field.one, row[g_index].LC)
            updated = []
            for relation in relations:
                factor = relation[g_index] * inverse
                if factor:
                    relation = [a - factor * b for a, b in zip(relation, row)]
                updated.append([e for i, e in enumerate(relation) if i != g_index])
            relations = updated
            twists.pop(g_index)
        return FPModule(self.ring, tuple(twists), tuple(tuple(r) for r in relations), self.name)

    # --- invariants --------------------------------------------------------

    @memoized
    def annihilator(self) -> Ideal:
        """Ann(M) = ker(R -> M^g, 1 -> (e_1, ..., e_g)), as an ideal of the cover containing I."""
        cover = self.ring.cover
        g = self.ngens
        if g == 0:
            return Ideal(cover, (cover.one,))
        column = tuple(
            self.ring.one if position == block * g + block else self.ring.zero
            for block in range(g)
            for position in range(block * g, (block + 1) * g)
        )
        relations = _block_relations(self.ring, self.relations, g, g)
        twists = tuple(t - self.twists[block] for block in range(g) for t in self.twists)
        found = kernel(self.ring, [column], relations, twists)
        return Ideal(cover, tuple(v[0] for v in found) + tuple(self.ring.ideal.generators))

    def krull_dim(self) -> int:
        """Dimension of the support; -1 for the zero module."""
        return self.annihilator().krull_dim()

    def hilbert_function(self, degree: int) -> int:
        """dim_k M_degree for a graded module."""
        if not self.is_graded:
            raise UnsupportedRingError("Hilbert functions need a graded module")
        return self.membership().standard_monomials(degree)

    def hilbert_window(self, lo: int, hi: int) -> list[int]:
        return [self.hilbert_function(d) for d in range(lo, hi + 1)]

    # --- constructions -----------------------------------------------------

    def twisted(self, shift: int) -> "FPModule":
        """M(-shift): every generator degree raised by `shift`."""
        return FPModule(self.ring, tuple(t + shift for t in self.twists), self.relations, self.name)

    def direct_sum(self, *others: "FPModule") -> "FPModule":
        modules = (self,) + others
        for other in others:
            if other.ring != self.ring:
                raise RingMismatchError("Direct sum of modules over different rings")
        twists = tuple(t for m in modules for t in m.twists)
        total = len(twists)
        relations = []
        offset = 0
        for module in modules:
            for relation in module.relations:
                vector = [self.ring.zero] * total
                vector[offset : offset + module.ngens] = relation
                relations.append(tuple(vector))
            offset += module.ngens
        return FPModule(self.ring, twists, tuple(relations))

    def power(self, copies: int) -> "FPModule":
        if copies == 0:
            return FPModule.zero(self.ring)
        return self.direct_sum(*([self] * (copies - 1)))

    def change_ring(self, ring: QuotientRing) -> "FPModule":
        """Same presentation over another quotient of the cover (M ⊗ R/J for R -> R/J)."""
        if ring.cover != self.ring.cover:
            raise RingMismatchError("Rings do not share a cover")
        return FPModule(ring, self.twists, self.relations, self.name)

    def restrict_to_cover(self) -> "FPModule":
        """The same module regarded over the cover P: relations gain I e_j."""
        cover_ring = self.ring.cover_ring()
        relations = list(self.relations)
        for g in self.ring.ideal.basis:
            for j in range(self.ngens):
                vector = [cover_ring.zero] * self.ngens
                vector[j] = g
                relations.append(tuple(vector))
        return FPModule(cover_ring, self.twists, tuple(relations), self.name)

    def hom(self, other: "FPModule") -> "HomModule":
        """Hom_R(M, N) = ker(N^g -> N^r), phi -> (phi(rel_k))_k."""
        if other.ring != self.ring:
            raise RingMismatchError("Hom between modules over different rings")
        g, h = self.ngens, other.ngens
        width = g * h
        source_twists = tuple(t - self.twists[j] for j in range(g) for t in other.twists)
        source_relations = _block_relations(self.ring, other.relations, g, h)
        if not self.relations:
            generators = [unit_vector(self.ring, width, i) for i in range(width)]
        else:
            r = len(self.relations)
            target_relations = _block_relations(self.ring, other.relations, r, h)
            transform = self.presentation_matrix().expand(h)
            relation_degrees = [
                vector_degree(self.ring, rel, self.twists) or 0 for rel in self.relations
            ]
            engine = SubmoduleEngine(
                self.ring,
                list(transform.columns),
                target_relations,
                tuple(t - d for d in relation_degrees for t in other.twists),
            )
            generators = engine.kernel()
        chosen = select_generators(self.ring, generators, source_relations, source_twists)
        relations, degrees = syzygy_presentation(
            self.ring, chosen, source_relations, source_twists
        )
        name = f"Hom({self.label()}, {other.label()})"
        module = FPModule(self.ring, degrees, tuple(relations), name)
        return HomModule(module, tuple(chosen), self, other, source_twists)


def _block_relations(ring: QuotientRing, relations, copies: int, size: int) -> list[PolyVector]:
    result = []
    for block in range(copies):
        for relation in relations:
            vector = [ring.zero] * (copies * size)
            vector[block * size : (block + 1) * size] = relation
            result.append(tuple(vector))
    return result


@dataclass(frozen=True, eq=False)
class HomModule:
    """
    Hom(M, N) together with its generators written as tuples (phi(e_1), ..., phi(e_g))
    in the ambient N^g.
    """

    module: FPModule
    generators: tuple[PolyVector, ...]
    source: FPModule
    target: FPModule
    ambient_twists: tuple[int, ...]

    def evaluation_images(self) -> list[PolyVector]:
        """
        For each generator e_j of M, the element (phi_1(e_j), ..., phi_s(e_j)) of
        N^s describing the evaluation map M -> Hom(Hom(M, N), N).
        """
        h = self.target.ngens
        images = []
        for j in range(self.source.ngens):
            vector: list = []
            for phi in self.generators:
                vector.extend(phi[j * h : (j + 1) * h])
            images.append(tuple(vector))
        return images
