"""
Submodule primitives over R = P/I: kernels, liftings, membership, generator
selection and presentations of subquotients.

All of them go through one tagged Groebner computation (see
semidual.ring.groebner.Elimination). Vectors are tuples of cover polynomials;
"relations" are vectors of the target that count as zero.
"""

from semidual.logging import setup_logger
from semidual.ring import Elimination, QuotientRing
from semidual.ring.groebner import ModuleGroebner, ModuleOrder, polys_from_vector, vector_from_polys

from .matrix import (
    PolyVector,
    reduce_vector,
    vector_degree,
    vector_is_homogeneous,
    vector_is_zero,
)

logger = setup_logger()


def _ideal_terms(ring: QuotientRing) -> list[dict]:
    return [dict(g.items()) for g in ring.ideal.basis]


def _degrees(ring: QuotientRing, vectors, twists) -> tuple[int, ...]:
    return tuple((vector_degree(ring, v, twists) or 0) for v in vectors)


class SubmoduleEngine:
    """
    The map R^k -> R^n / Q given by `columns`, prepared for kernel, lifting
    and image-membership queries.
    """

    def __init__(
        self,
        ring: QuotientRing,
        columns: list[PolyVector],
        relations: list[PolyVector],
        target_twists: tuple[int, ...] | None = None,
        source_twists: tuple[int, ...] | None = None,
    ):
        self.ring = ring
        self.columns = [tuple(c) for c in columns]
        self.relations = [tuple(r) for r in relations]
        length = len(target_twists) if target_twists is not None else self._infer_length()
        self.target_twists = tuple(target_twists) if target_twists is not None else (0,) * length
        if source_twists is None:
            source_twists = _degrees(ring, self.columns, self.target_twists)
        self.source_twists = tuple(source_twists)
        self._engine = Elimination(
            ring.field,
            ring.cover.weights,
            self.target_twists,
            self.source_twists,
            [vector_from_polys(c) for c in self.columns],
            [vector_from_polys(r) for r in self.relations if not vector_is_zero(r)],
            _ideal_terms(ring),
        )

    def _infer_length(self) -> int:
        for vector in self.columns + self.relations:
            return len(vector)
        return 0

    @property
    def length(self) -> int:
        return len(self.target_twists)

    def kernel(self) -> list[PolyVector]:
        """Generators of {a in R^k : sum a_i c_i in Q}, as normal forms, zeros dropped."""
        width = len(self.columns)
        found = []
        for tag in self._engine.kernel():
            polys = polys_from_vector(tag, self.ring.cover.ring, range(width))
            vector = reduce_vector(self.ring, polys)
            if not vector_is_zero(vector):
                found.append(vector)
        return found

    def lift(self, vector) -> PolyVector | None:
        """Coefficients a with vector = sum a_i c_i modulo Q, or None when not in the image."""
        coefficients = self._engine.lift(vector_from_polys(vector))
        if coefficients is None:
            return None
        width = len(self.columns)
        return reduce_vector(
            self.ring, polys_from_vector(coefficients, self.ring.cover.ring, range(width))
        )

    def contains(self, vector) -> bool:
        return self._engine.contains(vector_from_polys(vector))


def kernel(
    ring: QuotientRing, columns, relations=(), target_twists=None, source_twists=None
) -> list[PolyVector]:
    """Generators of the kernel of R^k -> R^n / Q."""
    if not columns:
        return []
    engine = SubmoduleEngine(ring, list(columns), list(relations), target_twists, source_twists)
    return engine.kernel()


class Membership:
    """Incremental membership test for a growing submodule of R^n (plus I)."""

    def __init__(self, ring: QuotientRing, twists: tuple[int, ...], generators=()):
        self.ring = ring
        self.twists = tuple(twists)
        order = ModuleOrder(ring.cover.weights, self.twists, len(self.twists))
        self._groebner = ModuleGroebner(ring.field, order)
        seed = []
        for poly in ring.ideal.basis:
            for pos in range(len(self.twists)):
                seed.append({(pos, m): c for m, c in poly.items()})
        seed.extend(vector_from_polys(g) for g in generators if not vector_is_zero(g))
        self._groebner.add(seed)

    def add(self, vector) -> None:
        self._groebner.add([vector_from_polys(vector)])

    def contains(self, vector) -> bool:
        return not self._groebner.reduce(vector_from_polys(vector))

    def normal_form(self, vector) -> PolyVector:
        remainder = self._groebner.reduce(vector_from_polys(vector))
        return polys_from_vector(remainder, self.ring.cover.ring, range(len(self.twists)))

    def standard_monomials(self, degree: int) -> int:
        """Number of monomials x^a e_j of twisted degree `degree` outside the leading terms."""
        count = 0
        cover = self.ring.cover
        for pos, twist in enumerate(self.twists):
            leads = [lead[0][1] for lead in self._groebner.leads if lead[0][0] == pos]
            for monomial in cover.monomials_of_degree(degree - twist):
                if not any(cover.divides(lead, monomial) for lead in leads):
                    count += 1
        return count


def _selection_key(ring: QuotientRing, twists):
    order = ModuleOrder(ring.cover.weights, tuple(twists), len(twists))

    def key(vector):
        terms = vector_from_polys(vector)
        lead = max(terms, key=order.key)
        return (vector_degree(ring, vector, twists), order.key(lead))

    return key


def select_generators(
    ring: QuotientRing,
    candidates,
    base=(),
    twists: tuple[int, ...] | None = None,
    prune: bool = True,
) -> list[PolyVector]:
    """
    Greedy generator selection for (<candidates> + <base>) / <base>.

    Candidates are scanned by ascending degree; one is kept when it is not in
    the span of the base and the already chosen ones. Over a graded-local ring
    with homogeneous input this is a minimal generating set. Otherwise the
    reduced basis of the whole submodule is offered first and the result is
    pruned of generators that a unit-coefficient relation makes redundant.
    """
    candidates = [tuple(c) for c in candidates if not vector_is_zero(c)]
    if not candidates:
        return []
    length = len(candidates[0])
    twists = tuple(twists) if twists is not None else (0,) * length
    base = [tuple(b) for b in base if not vector_is_zero(b)]
    graded = ring.graded_local and all(
        vector_is_homogeneous(ring, v, twists) for v in candidates + base
    )

    if not graded:
        candidates = _basis_candidates(ring, candidates, base, twists) + candidates

    membership = Membership(ring, twists, base)
    chosen: list[PolyVector] = []
    for vector in sorted(candidates, key=_selection_key(ring, twists)):
        if membership.contains(vector):
            continue
        chosen.append(vector)
        membership.add(vector)

    if not graded and prune:
        chosen = _prune_unit_relations(ring, chosen, base, twists)
    return chosen


def _basis_candidates(ring: QuotientRing, candidates, base, twists) -> list[PolyVector]:
    order = ModuleOrder(ring.cover.weights, tuple(twists), len(twists))
    groebner = ModuleGroebner(ring.field, order)
    seed = []
    for poly in ring.ideal.basis:
        for pos in range(len(twists)):
            seed.append({(pos, m): c for m, c in poly.items()})
    seed.extend(vector_from_polys(v) for v in list(base) + list(candidates))
    groebner.add(seed)
    found = []
    for vector in groebner.reduced_basis():
        polys = reduce_vector(ring, polys_from_vector(vector, ring.cover.ring, range(len(twists))))
        if not vector_is_zero(polys):
            found.append(polys)
    return found


def _prune_unit_relations(ring: QuotientRing, chosen, base, twists) -> list[PolyVector]:
    """Drop generators that a relation with a constant coefficient expresses through the others."""
    chosen = list(chosen)
    while len(chosen) > 1:
        relations = kernel(ring, chosen, base, twists)
        redundant = None
        for relation in relations:
            for index, coeff in enumerate(relation):
                if coeff and coeff.is_ground:
                    redundant = index
                    break
            if redundant is not None:
                break
        if redundant is None:
            break
        logger.debug(f"Pruning generator {redundant} expressed through a unit relation")
        chosen.pop(redundant)
    return chosen


def restrict_to(vectors, positions) -> list[PolyVector]:
    return [tuple(v[i] for i in positions) for v in vectors]


def syzygy_presentation(
    ring: QuotientRing,
    generators,
    relations=(),
    twists: tuple[int, ...] | None = None,
) -> tuple[list[PolyVector], tuple[int, ...]]:
    """
    Relations among `generators` of (<generators> + Q) / Q, with the
    generators' degrees: the syzygies of [generators | Q] restricted to the
    generator coordinates, then thinned to a generating set.
    """
    generators = [tuple(g) for g in generators]
    relations = [tuple(r) for r in relations if not vector_is_zero(r)]
    length = len(generators[0]) if generators else 0
    twists = tuple(twists) if twists is not None else (0,) * length
    degrees = _degrees(ring, generators, twists)
    if not generators:
        return [], ()
    columns = generators + relations
    syzygies = kernel(ring, columns, (), twists)
    restricted = [
        v for v in restrict_to(syzygies, range(len(generators))) if not vector_is_zero(v)
    ]
    thinned = select_generators(ring, restricted, (), degrees, prune=False)
    return thinned, degrees


def annihilator_of_element(ring: QuotientRing, vector, relations=(), twists=None):
    """Ann(v) in R^n / Q, returned as cover polynomials generating an ideal containing I."""
    found = kernel(ring, [tuple(vector)], relations, twists)
    return [v[0] for v in found] + list(ring.ideal.generators)


def span_contains(ring: QuotientRing, generators, vector, twists=None) -> bool:
    membership = Membership(ring, twists or (0,) * len(vector), generators)
    return membership.contains(vector)
