"""
Random instances for the fuzzer.

An instance is described by an InstanceSpec of plain tuples so that it can
be printed, shrunk and rebuilt over any field:

    ring     k[x, y, z]/(monomials of degree 2..3), at most 3 variables
    X        a direct sum of one or two Σ^a R/(monomials of degree 1..2)
    P        Σ^a R/(f) or Σ^a R, where f is the last variable
    F, G, H  Σ^a K(monomials) Koszul complexes

With `nzd` the ring relations avoid the last variable, so f is a nonzerodivisor
and R -> R/(f) has projective dimension 1.
"""

import random
from dataclasses import dataclass, replace
from typing import Iterator

from semidual.complexes import direct_sum, koszul, shift
from semidual.modules import FPModule, FreeComplex, ModuleComplex
from semidual.ring import Ideal, PolyRing, QuotientRing

VARIABLES = ("x", "y", "z")

Monomial = tuple[int, ...]


def format_monomial(monomial: Monomial) -> str:
    factors = []
    for name, exponent in zip(VARIABLES, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors) or "1"


def _ideal_text(monomials) -> str:
    return "(" + ", ".join(format_monomial(m) for m in monomials) + ")"


@dataclass(frozen=True)
class PartSpec:
    """Σ^shift R/(relations); no relations means a free summand."""

    relations: tuple[Monomial, ...] = ()
    shift: int = 0

    def describe(self) -> str:
        body = f"R/{_ideal_text(self.relations)}" if self.relations else "R"
        return f"Σ^{self.shift} {body}" if self.shift else body


@dataclass(frozen=True)
class InstanceSpec:
    nvars: int
    ring_relations: tuple[Monomial, ...]
    parts: tuple[PartSpec, ...]
    partner_cyclic: bool = True
    partner_shift: int = 0
    koszul: tuple[tuple[Monomial, ...], ...] = ()
    koszul_shifts: tuple[int, ...] = ()

    @property
    def names(self) -> tuple[str, ...]:
        return VARIABLES[: self.nvars]

    def describe(self) -> str:
        ring = f"k[{', '.join(self.names)}]"
        if self.ring_relations:
            ring += f"/{_ideal_text(self.ring_relations)}"
        last = self.names[-1]
        partner = f"R/({last})" if self.partner_cyclic else "R"
        if self.partner_shift:
            partner = f"Σ^{self.partner_shift} {partner}"
        text = f"R = {ring}; X = {' ⊕ '.join(p.describe() for p in self.parts)}; P = {partner}"
        for label, elements, k in zip("FGH", self.koszul, self.koszul_shifts):
            text += f"; {label} = Σ^{k} K{_ideal_text(elements)}"
        return text


@dataclass
class Instance:
    """An InstanceSpec realized over a field."""

    spec: InstanceSpec
    ring: QuotientRing
    complex: ModuleComplex
    partner: ModuleComplex
    element: object
    free_complexes: tuple[FreeComplex, ...] = ()


def gen_monomial(rng: random.Random, nvars: int, low: int, high: int, avoid_last=False):
    usable = nvars - 1 if avoid_last else nvars
    exponents = [0] * nvars
    for _ in range(rng.randint(low, high)):
        exponents[rng.randrange(usable)] += 1
    return tuple(exponents)


def gen_monomials(
    rng: random.Random, nvars: int, count: int, low: int, high: int, avoid_last=False
):
    found = {gen_monomial(rng, nvars, low, high, avoid_last) for _ in range(count)}
    return tuple(sorted(found))


def gen_part(rng: random.Random, nvars: int) -> PartSpec:
    shift_by = rng.randint(0, 1)
    if rng.randrange(3) == 0:
        return PartSpec((), shift_by)
    return PartSpec(gen_monomials(rng, nvars, rng.randint(1, 2), 1, 2), shift_by)


def gen_instance(rng: random.Random, nzd: bool = False) -> InstanceSpec:
    nvars = rng.randint(1, 3)
    if nzd and nvars == 1:
        ring_relations = ()
    else:
        count = rng.randint(0, 2)
        ring_relations = gen_monomials(rng, nvars, count, 2, 3, avoid_last=nzd)
    parts = tuple(gen_part(rng, nvars) for _ in range(rng.randint(1, 2)))
    koszul_elements = tuple(gen_monomials(rng, nvars, rng.randint(1, 2), 1, 2) for _ in range(3))
    return InstanceSpec(
        nvars,
        ring_relations,
        parts,
        partner_cyclic=rng.randrange(4) != 0,
        partner_shift=rng.randint(0, 1),
        koszul=koszul_elements,
        koszul_shifts=tuple(rng.randint(0, 1) for _ in range(3)),
    )


def _monomial(cover: PolyRing, monomial: Monomial):
    return cover.from_terms({monomial: 1})


def _part(ring: QuotientRing, part: PartSpec) -> ModuleComplex:
    cover = ring.cover
    if part.relations:
        generators = [_monomial(cover, m) for m in part.relations]
        module = FPModule.cyclic(ring, generators, name=f"R/{_ideal_text(part.relations)}")
    else:
        module = FPModule.free(ring, 1, "R")
    return ModuleComplex.concentrated(module, part.shift)


def build(spec: InstanceSpec, field) -> Instance:
    cover = PolyRing(spec.names, field)
    ideal = Ideal(cover, tuple(_monomial(cover, m) for m in spec.ring_relations))
    ring = QuotientRing(cover, ideal, "R")
    parts = [_part(ring, p) for p in spec.parts]
    complex_ = parts[0] if len(parts) == 1 else direct_sum(*parts)

    element = cover.gens[-1]
    if spec.partner_cyclic:
        module = FPModule.cyclic(ring, [element], name=f"R/({spec.names[-1]})")
    else:
        module = FPModule.free(ring, 1, "R")
    partner = ModuleComplex.concentrated(module, spec.partner_shift)

    free_complexes = tuple(
        shift(koszul(ring, [_monomial(cover, m) for m in elements]), k)
        for elements, k in zip(spec.koszul, spec.koszul_shifts)
    )
    return Instance(spec, ring, complex_, partner, element, free_complexes)


def _without(items: tuple, index: int) -> tuple:
    return items[:index] + items[index + 1 :]


def shrink_candidates(spec: InstanceSpec) -> Iterator[InstanceSpec]:
    """Smaller specs, each dropping one generator, summand or shift."""
    for i in range(len(spec.ring_relations)):
        yield replace(spec, ring_relations=_without(spec.ring_relations, i))
    for j, part in enumerate(spec.parts):
        if len(spec.parts) > 1:
            yield replace(spec, parts=_without(spec.parts, j))
        for i in range(len(part.relations)):
            smaller = replace(part, relations=_without(part.relations, i))
            yield replace(spec, parts=spec.parts[:j] + (smaller,) + spec.parts[j + 1 :])
        if part.shift:
            unshifted = replace(part, shift=0)
            yield replace(spec, parts=spec.parts[:j] + (unshifted,) + spec.parts[j + 1 :])
    for k, elements in enumerate(spec.koszul):
        if len(elements) > 1:
            for i in range(len(elements)):
                trimmed = _without(elements, i)
                yield replace(spec, koszul=spec.koszul[:k] + (trimmed,) + spec.koszul[k + 1 :])
    if spec.partner_shift:
        yield replace(spec, partner_shift=0)
