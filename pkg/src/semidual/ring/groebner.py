"""
Buchberger's algorithm for submodules of free modules over the cover ring.

A vector is a sparse dict {(position, monomial): coefficient}. Positions are
split into blocks; the module order compares the block first (main block
dominates), then the twisted weighted degree, then reverse-lex on the
monomial, then the position. Dominant main blocks make this an elimination
order: a basis element whose leading term sits in the tag block has no main
part, which is how kernels and liftings are read off.
"""

from dataclasses import dataclass

from sympy.polys.domains.domain import Domain
from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyElement

from semidual.logging import setup_logger

logger = setup_logger()

Term = tuple[int, tuple[int, ...]]
Vector = dict[Term, object]


@dataclass(frozen=True)
class ModuleOrder:
    """Monomial order on terms of a free module with twisted generators."""

    weights: tuple[int, ...]
    twists: tuple[int, ...]
    main_rank: int

    def key(self, term: Term):
        pos, monomial = term
        degree = sum(w * e for w, e in zip(self.weights, monomial)) + self.twists[pos]
        block = 1 if pos < self.main_rank else 0
        return (block, degree, tuple(-e for e in reversed(monomial)), -pos)

    @property
    def rank(self) -> int:
        return len(self.twists)


def vector_from_polys(polys) -> Vector:
    """Pack a sequence of polynomials (one per position) into a sparse vector."""
    vector: Vector = {}
    for pos, poly in enumerate(polys):
        for monomial, coeff in poly.items():
            vector[(pos, monomial)] = coeff
    return vector


def polys_from_vector(vector: Vector, ring, positions: range) -> tuple[PolyElement, ...]:
    """Unpack the given positions of a sparse vector into polynomials."""
    buckets: dict[int, dict] = {pos: {} for pos in positions}
    for (pos, monomial), coeff in vector.items():
        if pos in buckets:
            buckets[pos][monomial] = coeff
    return tuple(ring.from_dict(buckets[pos]) for pos in positions)


def shift_positions(vector: Vector, offset: int) -> Vector:
    return {(pos + offset, monomial): coeff for (pos, monomial), coeff in vector.items()}


def scale(vector: Vector, field: Domain, coeff, monomial: tuple[int, ...]) -> Vector:
    return {
        (pos, monomial_mul(m, monomial)): field.mul(c, coeff) for (pos, m), c in vector.items()
    }


def subtract_into(target: Vector, vector: Vector, field: Domain, coeff, monomial) -> None:
    """target -= coeff * x^monomial * vector, in place."""
    for (pos, m), c in vector.items():
        term = (pos, monomial_mul(m, monomial))
        value = target.get(term, field.zero) - field.mul(coeff, c)
        if value:
            target[term] = value
        else:
            target.pop(term, None)


def is_main_free(vector: Vector, main_rank: int) -> bool:
    return all(pos >= main_rank for pos, _ in vector)


class ModuleGroebner:
    """
    Incrementally maintained Groebner basis of a submodule of a free module.

    Pairs are formed only between elements whose leading terms share a position,
    selected by the smallest lcm (normal strategy) and pruned with Buchberger's
    chain criterion. The coprime-leads criterion is valid only for ideals, so it
    is applied only when the free module has rank one.
    """

    def __init__(self, field: Domain, order: ModuleOrder):
        self.field = field
        self.order = order
        self.basis: list[Vector] = []
        self.leads: list[tuple[Term, object]] = []
        self._by_position: dict[int, list[int]] = {}
        self._pairs: set[tuple[int, int]] = set()
        self.reductions = 0

    def lead(self, vector: Vector) -> Term:
        return max(vector, key=self.order.key)

    def _find_reducer(self, term: Term) -> int | None:
        pos, monomial = term
        for index in self._by_position.get(pos, ()):
            if monomial_divides(self.leads[index][0][1], monomial):
                return index
        return None

    def reduce(self, vector: Vector) -> Vector:
        """Full normal form with respect to the current basis."""
        work = dict(vector)
        remainder: Vector = {}
        key = self.order.key
        while work:
            term = max(work, key=key)
            coeff = work[term]
            index = self._find_reducer(term)
            if index is None:
                remainder[term] = work.pop(term)
                continue
            lead_term, lead_coeff = self.leads[index]
            factor = self.field.quo(coeff, lead_coeff)
            shift = monomial_div(term[1], lead_term[1])
            subtract_into(work, self.basis[index], self.field, factor, shift)
            self.reductions += 1
        return remainder

    def _append(self, vector: Vector) -> int:
        term = self.lead(vector)
        inverse = self.field.quo(self.field.one, vector[term])
        monic = {t: self.field.mul(c, inverse) for t, c in vector.items()}
        index = len(self.basis)
        self.basis.append(monic)
        self.leads.append((term, self.field.one))
        for other in self._by_position.get(term[0], ()):
            self._pairs.add((other, index))
        self._by_position.setdefault(term[0], []).append(index)
        return index

    def _pair_lcm(self, pair: tuple[int, int]) -> Term:
        i, j = pair
        pos = self.leads[i][0][0]
        return (pos, monomial_lcm(self.leads[i][0][1], self.leads[j][0][1]))

    def _chain_criterion(self, pair: tuple[int, int], lcm: Term) -> bool:
        i, j = pair
        for k in self._by_position.get(lcm[0], ()):
            if k in (i, j):
                continue
            if not monomial_divides(self.leads[k][0][1], lcm[1]):
                continue
            if (min(i, k), max(i, k)) in self._pairs:
                continue
            if (min(j, k), max(j, k)) not in self._pairs:
                return True
        return False

    def _s_vector(self, pair: tuple[int, int], lcm: Term) -> Vector:
        i, j = pair
        one = self.field.one
        left = monomial_div(lcm[1], self.leads[i][0][1])
        right = monomial_div(lcm[1], self.leads[j][0][1])
        result = scale(self.basis[i], self.field, one, left)
        subtract_into(result, self.basis[j], self.field, one, right)
        return result

    def add(self, vectors) -> list[int]:
        """Add generators and complete the basis. Returns indices of new basis elements."""
        added = []
        for vector in vectors:
            if not vector:
                continue
            reduced = self.reduce(vector)
            if reduced:
                added.append(self._append(reduced))

        key = self.order.key
        rank_one = self.order.rank == 1
        while self._pairs:
            pair = min(self._pairs, key=lambda p: (key(self._pair_lcm(p)), p))
            lcm = self._pair_lcm(pair)
            i, j = pair
            if rank_one and monomial_mul(self.leads[i][0][1], self.leads[j][0][1]) == lcm[1]:
                self._pairs.discard(pair)
                continue
            if self._chain_criterion(pair, lcm):
                self._pairs.discard(pair)
                continue
            self._pairs.discard(pair)
            remainder = self.reduce(self._s_vector(pair, lcm))
            if remainder:
                added.append(self._append(remainder))

        logger.debug(
            f"Groebner basis has {len(self.basis)} elements after {self.reductions} reduction steps"
        )
        return added

    def reduced_basis(self) -> list[Vector]:
        """Minimal, tail-reduced, monic basis (the unique reduced basis)."""
        minimal = []
        for index, (term, _) in enumerate(self.leads):
            redundant = False
            for other, (other_term, _) in enumerate(self.leads):
                if other == index or other_term[0] != term[0]:
                    continue
                if monomial_divides(other_term[1], term[1]):
                    if other_term[1] != term[1] or other < index:
                        redundant = True
                        break
            if not redundant:
                minimal.append(index)

        result = []
        for index in minimal:
            vector = self.basis[index]
            term = self.leads[index][0]
            tail = {t: c for t, c in vector.items() if t != term}
            peers = ModuleGroebner(self.field, self.order)
            for other in minimal:
                if other != index:
                    peers._append(self.basis[other])
            peers._pairs.clear()
            tail = peers.reduce(tail)
            tail[term] = self.field.one
            result.append(tail)
        result.sort(key=lambda v: self.order.key(max(v, key=self.order.key)))
        return result

    def eliminated(self) -> list[Vector]:
        """Basis elements with no main part: the elimination submodule."""
        return [v for v in self.basis if is_main_free(v, self.order.main_rank)]


class Elimination:
    """
    Tagged elimination for kernels and liftings.

    Given columns c_1..c_k of a map P^k -> P^n, relations Q in P^n and an ideal I,
    the basis of {(c_i, e_i)} + {(q, 0)} + {(f e_j, 0), (0, f e_i) : f in I}
    answers two questions: the tag parts of main-free elements generate the
    kernel of R^k -> R^n / Q, and reducing (v, 0) leaves a main-free remainder
    (0, t) exactly when v is in the image, with coefficients -t.
    """

    def __init__(
        self,
        field: Domain,
        weights: tuple[int, ...],
        target_twists: tuple[int, ...],
        source_twists: tuple[int, ...],
        columns: list[Vector],
        relations: list[Vector],
        ideal: list[dict],
    ):
        self.field = field
        self.rank = len(target_twists)
        self.width = len(source_twists)
        self.order = ModuleOrder(
            tuple(weights), tuple(target_twists) + tuple(source_twists), self.rank
        )
        generators: list[Vector] = []
        for index, column in enumerate(columns):
            tagged = dict(column)
            tagged[(self.rank + index, (0,) * len(weights))] = field.one
            generators.append(tagged)
        generators.extend(dict(r) for r in relations)
        for poly in ideal:
            for pos in range(self.rank + self.width):
                generators.append({(pos, m): c for m, c in poly.items()})
        self.groebner = ModuleGroebner(field, self.order)
        self.groebner.add(generators)

    def kernel(self) -> list[Vector]:
        """Tag parts of the elimination submodule, positions renumbered from 0."""
        found = []
        for vector in self.groebner.eliminated():
            tag = shift_positions(vector, -self.rank)
            if tag:
                found.append(tag)
        return found

    def reduce(self, vector: Vector) -> Vector:
        return self.groebner.reduce(vector)

    def lift(self, vector: Vector) -> Vector | None:
        """Coefficients a with v = sum a_i c_i modulo Q and I, or None."""
        remainder = self.groebner.reduce(vector)
        if not is_main_free(remainder, self.rank):
            return None
        return {
            (pos - self.rank, m): self.field.neg(c) for (pos, m), c in remainder.items()
        }

    def contains(self, vector: Vector) -> bool:
        return is_main_free(self.groebner.reduce(vector), self.rank)
