"""
Complexes of finitely presented modules and of free modules, chain maps and
the homology of a complex.

Indices are homological: the differential ∂_n goes from degree n to degree
n - 1 and is stored as a Matrix from the generators of X_n to the generators
of X_{n-1}.
"""

from abc import ABC, abstractmethod

from semidual.errors import NotAChainMapError, RingMismatchError
from semidual.logging import setup_logger
from semidual.memo import memoized
from semidual.ring import QuotientRing

from .matrix import Matrix, unit_vector, vector_is_zero
from .module import FPModule
from .submodule import Membership, kernel, select_generators, syzygy_presentation

logger = setup_logger()


def subquotient(ring: QuotientRing, generators, base, twists, name: str = "") -> FPModule:
    """(<generators> + <base>) / <base> inside R^n, presented on chosen generators."""
    chosen = select_generators(ring, generators, base, twists)
    if not chosen:
        return FPModule.zero(ring)
    relations, degrees = syzygy_presentation(ring, chosen, base, twists)
    return FPModule(ring, degrees, tuple(relations), name)


class HomologicalObject(ABC):
    """Anything with a ring, an index range and computable homology."""

    @property
    @abstractmethod
    def ring(self) -> QuotientRing:
        pass

    @property
    @abstractmethod
    def lo(self) -> int:
        """Lowest index of the representative (0 with hi = -1 for the zero complex)."""
        pass

    @property
    @abstractmethod
    def hi(self) -> int:
        pass

    @abstractmethod
    def homology(self, n: int) -> FPModule:
        pass

    @abstractmethod
    def over_cover(self) -> "ModuleComplex":
        """A complex of modules over the cover ring with the same homology (as P-modules)."""
        pass

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def label(self) -> str:
        return type(self).__name__


class ModuleComplex(HomologicalObject):
    """A bounded complex of FPModules."""

    def __init__(
        self,
        ring: QuotientRing,
        modules: dict[int, FPModule],
        differentials: dict[int, Matrix] | None = None,
        name: str = "",
        check: bool = True,
    ):
        self._ring = ring
        self.name = name
        self.modules = {n: m for n, m in modules.items() if m.ngens > 0}
        for n, module in self.modules.items():
            if module.ring != ring:
                raise RingMismatchError(f"Module in degree {n} lives over another ring")
        self.differentials = {}
        for n, matrix in (differentials or {}).items():
            expected = (self.module(n - 1).ngens, self.module(n).ngens)
            if matrix.shape != expected:
                logger.error(f"Differential {n} has shape {matrix.shape}, expected {expected}")
                raise ValueError(f"Differential {n} has shape {matrix.shape}, expected {expected}")
            if expected[0] and expected[1] and not matrix.is_zero():
                self.differentials[n] = matrix
        if check:
            self.validate()

    # --- structure ---------------------------------------------------------

    @property
    def ring(self) -> QuotientRing:
        return self._ring

    @property
    def lo(self) -> int:
        return min(self.modules) if self.modules else 0

    @property
    def hi(self) -> int:
        return max(self.modules) if self.modules else -1

    def module(self, n: int) -> FPModule:
        return self.modules.get(n) or FPModule.zero(self.ring)

    def differential(self, n: int) -> Matrix:
        matrix = self.differentials.get(n)
        if matrix is not None:
            return matrix
        return Matrix.zeros(self.ring, self.module(n - 1).ngens, self.module(n).ngens)

    @property
    def is_free(self) -> bool:
        return all(m.is_free for m in self.modules.values())

    def is_zero_representative(self) -> bool:
        return not self.modules

    def label(self) -> str:
        return self.name or f"complex[{self.lo}..{self.hi}]"

    def validate(self) -> None:
        """Check that every ∂_n is well defined on the presentations and that ∂∂ = 0."""
        for n in self.indices():
            source, target = self.module(n), self.module(n - 1)
            if not source.ngens or not target.ngens:
                continue
            d = self.differential(n)
            for relation in source.relations:
                if not target.is_zero_element(d.apply(relation)):
                    logger.error(f"∂_{n} does not respect the relations of degree {n}")
                    raise ValueError(f"∂_{n} does not respect the relations of degree {n}")
            lower = self.module(n - 2)
            if lower.ngens:
                composite = self.differential(n - 1) @ d
                if not all(lower.is_zero_element(c) for c in composite.columns):
                    logger.error(f"∂_{n - 1} ∘ ∂_{n} is not zero in {self.label()}")
                    raise ValueError(f"∂_{n - 1} ∘ ∂_{n} is not zero")

    # --- homology ----------------------------------------------------------

    @memoized
    def homology(self, n: int) -> FPModule:
        """H_n = ker ∂_n / im ∂_{n+1}, presented on chosen cycle generators."""
        module = self.module(n)
        if not module.ngens:
            return FPModule.zero(self.ring)
        target = self.module(n - 1)
        if target.ngens:
            cycles = kernel(
                self.ring,
                list(self.differential(n).columns),
                target.relations,
                target.twists,
                module.twists,
            )
        else:
            cycles = module.generators()
        boundaries = [c for c in self.differential(n + 1).columns if not vector_is_zero(c)]
        base = boundaries + list(module.relations)
        return subquotient(self.ring, cycles, base, module.twists, f"H_{n}({self.label()})")

    def homology_is_zero(self, n: int) -> bool:
        return self.homology(n).is_zero()

    # --- constructions -----------------------------------------------------

    def shift(self, k: int) -> "ModuleComplex":
        """Σ^k X: (Σ^k X)_n = X_{n-k} and ∂ picks up the sign (-1)^k."""
        sign = -1 if k % 2 else 1
        modules = {n + k: m for n, m in self.modules.items()}
        differentials = {n + k: d.scale(sign) for n, d in self.differentials.items()}
        return self._rebuild(modules, differentials, f"Σ^{k}{self.label()}" if k else self.name)

    def _rebuild(self, modules, differentials, name) -> "ModuleComplex":
        return ModuleComplex(self.ring, modules, differentials, name, check=False)

    def change_ring(self, ring: QuotientRing) -> "ModuleComplex":
        """Termwise X ⊗_R R/J for a quotient sharing the cover."""
        modules = {n: m.change_ring(ring) for n, m in self.modules.items()}
        differentials = {n: d.change_ring(ring) for n, d in self.differentials.items()}
        return ModuleComplex(ring, modules, differentials, self.name, check=False)

    def over_cover(self) -> "ModuleComplex":
        cover = self.ring.cover_ring()
        modules = {n: m.restrict_to_cover() for n, m in self.modules.items()}
        differentials = {n: d.change_ring(cover) for n, d in self.differentials.items()}
        return ModuleComplex(cover, modules, differentials, self.name, check=False)

    def twists(self, n: int) -> tuple[int, ...]:
        return self.module(n).twists

    def describe(self) -> str:
        parts = [f"{n}: {self.module(n).describe()}" for n in self.indices()]
        return f"{self.label()} over {self.ring.describe()} {{" + ", ".join(parts) + "}"

    @classmethod
    def concentrated(cls, module: FPModule, degree: int = 0, name: str = "") -> "ModuleComplex":
        """The module as a complex in a single degree."""
        return cls(module.ring, {degree: module}, {}, name or module.name, check=False)


class FreeComplex(ModuleComplex):
    """A bounded complex of graded free modules."""

    def __init__(
        self,
        ring: QuotientRing,
        twists: dict[int, tuple[int, ...]],
        differentials: dict[int, Matrix] | None = None,
        name: str = "",
        check: bool = True,
    ):
        modules = {n: FPModule.free(ring, tuple(t)) for n, t in twists.items() if len(t)}
        super().__init__(ring, modules, differentials, name, check)

    @classmethod
    def from_module_complex(cls, complex_: ModuleComplex) -> "FreeComplex":
        if not complex_.is_free:
            raise ValueError(f"{complex_.label()} is not a complex of free modules")
        twists = {n: m.twists for n, m in complex_.modules.items()}
        return cls(complex_.ring, twists, dict(complex_.differentials), complex_.name, check=False)

    @classmethod
    def ring_complex(cls, ring: QuotientRing, degree: int = 0, twist: int = 0) -> "FreeComplex":
        """R(-twist) in a single degree."""
        return cls(ring, {degree: (twist,)}, {}, ring.name or "R", check=False)

    @classmethod
    def zero(cls, ring: QuotientRing) -> "FreeComplex":
        return cls(ring, {}, {}, "0", check=False)

    def _rebuild(self, modules, differentials, name) -> "FreeComplex":
        twists = {n: m.twists for n, m in modules.items()}
        return FreeComplex(self.ring, twists, differentials, name, check=False)

    def rank(self, n: int) -> int:
        return self.module(n).ngens

    def ranks(self) -> list[int]:
        return [self.rank(n) for n in self.indices()]

    def length(self) -> int:
        """hi - lo for a nonzero complex, -1 for the zero complex."""
        return self.hi - self.lo if self.modules else -1

    def is_minimal(self) -> bool:
        """No differential entry has a nonzero constant term."""
        return all(d.is_minimal() for d in self.differentials.values())

    def is_graded(self) -> bool:
        if not self.ring.graded:
            return False
        return all(
            d.is_homogeneous(self.twists(n - 1), self.twists(n))
            for n, d in self.differentials.items()
        )

    def change_ring(self, ring: QuotientRing) -> "FreeComplex":
        twists = {n: m.twists for n, m in self.modules.items()}
        differentials = {n: d.change_ring(ring) for n, d in self.differentials.items()}
        return FreeComplex(ring, twists, differentials, self.name, check=False)

    def dual(self) -> "FreeComplex":
        """
        Hom_R(F, R): degree n holds Hom(F_{-n}, R) with negated twists and the
        differential -(-1)^n ∂_{1-n}^T.
        """
        twists = {-n: tuple(-t for t in m.twists) for n, m in self.modules.items()}
        differentials = {}
        for n in range(-self.hi + 1, -self.lo + 1):
            d = self.differential(1 - n)
            if d.rows and d.cols:
                sign = 1 if n % 2 else -1
                differentials[n] = d.transpose().scale(sign)
        return FreeComplex(self.ring, twists, differentials, f"{self.label()}*", check=False)


class ChainMap:
    """A degree-0 map of complexes, f_n: X_n -> Y_n on generators."""

    def __init__(
        self,
        source: ModuleComplex,
        target: ModuleComplex,
        components: dict[int, Matrix],
        check: bool = True,
    ):
        if source.ring != target.ring:
            raise RingMismatchError("Chain map between complexes over different rings")
        self.source = source
        self.target = target
        self.components = {}
        for n, matrix in components.items():
            expected = (target.module(n).ngens, source.module(n).ngens)
            if matrix.shape != expected:
                raise NotAChainMapError(
                    f"Component {n} has shape {matrix.shape}, expected {expected}"
                )
            if expected[0] and expected[1]:
                self.components[n] = matrix
        if check:
            self.validate()

    @property
    def ring(self) -> QuotientRing:
        return self.source.ring

    def component(self, n: int) -> Matrix:
        matrix = self.components.get(n)
        if matrix is not None:
            return matrix
        return Matrix.zeros(self.ring, self.target.module(n).ngens, self.source.module(n).ngens)

    def indices(self) -> range:
        return range(min(self.source.lo, self.target.lo), max(self.source.hi, self.target.hi) + 1)

    def validate(self) -> None:
        """f must respect presentations and commute with the differentials."""
        for n in self.indices():
            f = self.component(n)
            target = self.target.module(n)
            for relation in self.source.module(n).relations:
                if not target.is_zero_element(f.apply(relation)):
                    raise NotAChainMapError(f"f_{n} does not respect the relations of degree {n}")
            lower = self.target.module(n - 1)
            if not lower.ngens:
                continue
            left = self.target.differential(n) @ f
            right = self.component(n - 1) @ self.source.differential(n)
            for column in (left - right).columns:
                if not lower.is_zero_element(column):
                    logger.error(f"Chain map fails to commute with ∂ at degree {n}")
                    raise NotAChainMapError(f"∂f - f∂ is nonzero at degree {n}")

    @classmethod
    def identity(cls, complex_: ModuleComplex) -> "ChainMap":
        components = {
            n: Matrix.identity(complex_.ring, complex_.module(n).ngens) for n in complex_.indices()
        }
        return cls(complex_, complex_, components, check=False)

    @classmethod
    def zero(cls, source: ModuleComplex, target: ModuleComplex) -> "ChainMap":
        return cls(source, target, {}, check=False)

    def is_zero_on_homology(self, n: int) -> bool:
        """True when every cycle generator of H_n(source) maps to a boundary."""
        homology = self.source.homology(n)
        if not homology.ngens:
            return True
        lower = self.target.module(n)
        base = list(self.target.differential(n + 1).columns) + list(lower.relations)
        membership = Membership(self.ring, lower.twists, base)
        cycles = self._cycle_generators(n)
        return all(membership.contains(self.component(n).apply(c)) for c in cycles)

    def _cycle_generators(self, n: int):
        module = self.source.module(n)
        if not module.ngens:
            return []
        target = self.source.module(n - 1)
        if not target.ngens:
            return [unit_vector(self.ring, module.ngens, i) for i in range(module.ngens)]
        return kernel(
            self.ring,
            list(self.source.differential(n).columns),
            target.relations,
            target.twists,
            module.twists,
        )
