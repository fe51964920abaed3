"""
Free resolutions of modules and complexes.

The engine builds a free complex F with a quasi-isomorphism F -> X one
degree at a time: at step n it takes the cycles of the mapping cone of
F_{<n} -> X in degree n, picks generators modulo the boundaries already
available, and adds one free generator of F_n per chosen cycle. For a module
this is the usual syzygy iteration. Over a graded-local ring with graded
input the chosen generators are minimal; a final pass cancels any unit
entries that remain.
"""

from dataclasses import dataclass

from semidual.errors import UnsupportedRingError
from semidual.extint import ExtInt
from semidual.logging import setup_logger
from semidual.memo import cached, cached_values
from semidual.ring import QuotientRing

from .complex import ChainMap, FreeComplex, ModuleComplex
from .enums import PdCertificate
from .matrix import Matrix, vector_degree
from .module import FPModule
from .submodule import kernel, select_generators, syzygy_presentation

logger = setup_logger()


@dataclass(frozen=True, eq=False)
class Resolution:
    """A free complex over X with its augmentation, resolved through `cutoff`."""

    source: ModuleComplex
    complex: FreeComplex
    augmentation: ChainMap
    cutoff: int
    terminated: bool
    minimal: bool

    @property
    def ring(self) -> QuotientRing:
        return self.source.ring

    def ranks(self, upto: int | None = None) -> list[int]:
        """Ranks of F_lo .. F_upto (default: the cutoff)."""
        upto = self.cutoff if upto is None else upto
        return [self.complex.rank(n) for n in range(self.source.lo, upto + 1)]


def is_graded_complex(complex_: ModuleComplex) -> bool:
    if not complex_.ring.graded:
        return False
    if not all(m.is_graded for m in complex_.modules.values()):
        return False
    return all(
        d.is_homogeneous(complex_.twists(n - 1), complex_.twists(n))
        for n, d in complex_.differentials.items()
    )


def _as_complex(source) -> ModuleComplex:
    if isinstance(source, FPModule):
        return ModuleComplex.concentrated(source)
    return source


def resolve(source, cutoff: int) -> Resolution:
    """
    Resolve a module or a complex through homological degree `cutoff`.

    Results are cached on the source; a terminated resolution or one with a
    larger cutoff answers later requests.
    """
    for (_, key_cutoff), found in cached_values(source, "resolution"):
        if found.terminated or key_cutoff >= cutoff:
            return found
    return cached(source, ("resolution", cutoff), lambda: _resolve(_as_complex(source), cutoff))


def _resolve(source: ModuleComplex, cutoff: int) -> Resolution:
    ring = source.ring
    minimal = ring.graded_local and is_graded_complex(source)
    twists: dict[int, tuple[int, ...]] = {}
    differentials: dict[int, list] = {}
    augmentation: dict[int, list] = {}
    terminated = False

    if not source.modules:
        empty = FreeComplex.zero(ring)
        return Resolution(source, empty, ChainMap.zero(empty, source), cutoff, True, minimal)

    for n in range(source.lo, cutoff + 1):
        upper = twists.get(n - 1, ())
        lower = twists.get(n - 2, ())
        module, below = source.module(n), source.module(n - 1)
        source_twists = upper + module.twists
        if not source_twists:
            if n >= source.hi:
                terminated = True
                break
            continue

        target_twists = lower + below.twists
        if target_twists:
            d_f = Matrix.from_columns(ring, len(lower), differentials.get(n - 1, []))
            alpha = Matrix.from_columns(ring, below.ngens, augmentation.get(n - 1, []))
            cone = Matrix.block(
                ring,
                [len(lower), below.ngens],
                [len(upper), module.ngens],
                {(0, 0): -d_f, (1, 0): alpha, (1, 1): source.differential(n)},
            )
            padding = (ring.zero,) * len(lower)
            relations = [padding + tuple(r) for r in below.relations]
            cycles = kernel(ring, list(cone.columns), relations, target_twists, source_twists)
        else:
            cycles = [
                tuple(ring.one if i == j else ring.zero for i in range(len(source_twists)))
                for j in range(len(source_twists))
            ]

        padding = (ring.zero,) * len(upper)
        base = [padding + tuple(c) for c in source.differential(n + 1).columns]
        base += [padding + tuple(r) for r in module.relations]
        chosen = select_generators(ring, cycles, base, source_twists)
        logger.debug(f"Resolution step {n}: {len(chosen)} new generators")

        if not chosen:
            if n >= source.hi:
                terminated = True
                break
            continue

        twists[n] = tuple(vector_degree(ring, z, source_twists) or 0 for z in chosen)
        differentials[n] = [z[: len(upper)] for z in chosen]
        augmentation[n] = [tuple(-e for e in z[len(upper) :]) for z in chosen]

    twists, differentials, augmentation = _cancel_units(ring, twists, differentials, augmentation)
    complex_ = FreeComplex(
        ring,
        twists,
        {
            n: Matrix.from_columns(ring, len(twists.get(n - 1, ())), columns)
            for n, columns in differentials.items()
            if columns and twists.get(n - 1)
        },
        f"res({source.label()})",
        check=False,
    )
    components = {
        n: Matrix.from_columns(ring, source.module(n).ngens, columns)
        for n, columns in augmentation.items()
        if columns and source.module(n).ngens
    }
    chain_map = ChainMap(complex_, source, components, check=False)
    logger.info(
        f"Resolved {source.label()} through {cutoff}: ranks {complex_.ranks()}"
        f"{' (terminated)' if terminated else ''}"
    )
    return Resolution(source, complex_, chain_map, cutoff, terminated, minimal)


def _find_unit(differentials) -> tuple[int, int, int] | None:
    for n in sorted(differentials):
        for j, column in enumerate(differentials[n]):
            for i, entry in enumerate(column):
                if entry and entry.is_ground:
                    return n, i, j
    return None


def _cancel_units(ring: QuotientRing, twists, differentials, augmentation):
    """
    Split off contractible summands R -u-> R for constant entries u of the
    differentials, keeping the augmentation a chain map.
    """
    twists = {n: list(t) for n, t in twists.items()}
    differentials = {n: [list(c) for c in cols] for n, cols in differentials.items()}
    augmentation = {n: [list(c) for c in cols] for n, cols in augmentation.items()}
    field = ring.field
    while (pivot := _find_unit(differentials)) is not None:
        n, i, j = pivot
        a = differentials[n]
        inverse = field.quo(field.one, a[j][i].LC)
        pivot_column = a[j]
        pivot_row = [column[i] for column in a]
        reduced = []
        for index, column in enumerate(a):
            if index == j:
                continue
            factor = pivot_row[index] * inverse
            reduced.append(
                [
                    ring.reduce(column[k] - pivot_column[k] * factor)
                    for k in range(len(column))
                    if k != i
                ]
            )
        differentials[n] = reduced

        alpha = augmentation.get(n)
        if alpha:
            anchor = alpha[j]
            augmentation[n] = [
                [ring.reduce(x - y * pivot_row[index] * inverse) for x, y in zip(column, anchor)]
                for index, column in enumerate(alpha)
                if index != j
            ]
        if augmentation.get(n - 1):
            augmentation[n - 1].pop(i)
        if n + 1 in differentials:
            differentials[n + 1] = [
                [e for k, e in enumerate(c) if k != j] for c in differentials[n + 1]
            ]
        if n - 1 in differentials:
            differentials[n - 1].pop(i)
        twists[n].pop(j)
        twists[n - 1].pop(i)
        logger.debug(f"Cancelled a unit entry of ∂_{n}")
    return (
        {n: tuple(t) for n, t in twists.items() if t},
        {n: [tuple(c) for c in cols] for n, cols in differentials.items()},
        {n: [tuple(c) for c in cols] for n, cols in augmentation.items()},
    )


def syzygies(matrix: Matrix, target_twists=None) -> Matrix:
    """Columns generate the kernel of the map R^cols -> R^rows given by `matrix`."""
    ring = matrix.ring
    target_twists = tuple(target_twists) if target_twists is not None else (0,) * matrix.rows
    columns = list(matrix.columns)
    source_twists = tuple(vector_degree(ring, c, target_twists) or 0 for c in columns)
    found = kernel(ring, columns, (), target_twists, source_twists)
    chosen = select_generators(ring, found, (), source_twists)
    return Matrix.from_columns(ring, matrix.cols, chosen)


def minimal_free_resolution(module: FPModule, cutoff: int) -> FreeComplex:
    """F_0 <- F_1 <- ... <- F_cutoff resolving `module`."""
    if cutoff < 0:
        logger.error(f"Negative resolution cutoff {cutoff}")
        raise ValueError(f"Resolution cutoff must be non-negative, got {cutoff}")
    return resolve(module, cutoff).complex


@dataclass(frozen=True)
class PdReport:
    """Projective dimension with the evidence that established it."""

    value: ExtInt
    certificate: PdCertificate
    resolution: Resolution | None = None
    syzygy: FPModule | None = None
    syzygy_generators: int = 0
    cutoff: int = 0

    @property
    def is_finite(self) -> bool:
        return self.value.is_finite

    def to_dict(self) -> dict:
        data = {
            "value": self.value.to_json(),
            "certificate": self.certificate.value,
            "cutoff": self.cutoff,
        }
        if self.resolution is not None:
            data["ranks"] = self.resolution.complex.ranks()
        if self.certificate == PdCertificate.INFINITE:
            data["syzygy_generators"] = self.syzygy_generators
        return data


def _top_nonvanishing_ext(complex_: FreeComplex) -> int:
    """max{i : H^i(Hom(F, R)) != 0}, the projective dimension for a finite resolution F."""
    dual = complex_.dual()
    for i in range(complex_.hi, complex_.lo - 1, -1):
        if not dual.homology(-i).is_zero():
            return i
    return complex_.lo


def pd(module: FPModule) -> PdReport:
    """
    pd_R(M). The module is resolved through v + 1 (v = number of variables).
    A terminated resolution gives the exact value; over a graded-local ring a
    minimal resolution still alive at v + 1 certifies pd = ∞.
    """
    ring = module.ring
    cutoff = ring.nvars + 1
    resolution = resolve(module, cutoff)
    if resolution.terminated:
        complex_ = resolution.complex
        if not complex_.modules:
            value = ExtInt.neg_inf()
        elif resolution.minimal:
            value = ExtInt(complex_.hi)
        else:
            value = ExtInt(_top_nonvanishing_ext(complex_))
        return PdReport(value, PdCertificate.TERMINATED, resolution, cutoff=cutoff)

    if not resolution.minimal:
        logger.warning(f"pd of {module.label()} is not decided by a non-minimal resolution")
        raise UnsupportedRingError("unsupported: use localized invariants")

    complex_ = resolution.complex
    generators = list(complex_.differential(cutoff).columns)
    relations, degrees = syzygy_presentation(ring, generators, (), complex_.twists(cutoff - 1))
    syzygy = FPModule(ring, degrees, tuple(relations), f"Ω^{cutoff}({module.label()})")
    return PdReport(
        ExtInt.pos_inf(),
        PdCertificate.INFINITE,
        resolution,
        syzygy,
        complex_.rank(cutoff),
        cutoff,
    )


def betti_numbers(module: FPModule, cutoff: int) -> list[int]:
    """β_0 .. β_cutoff from the minimal resolution."""
    if not module.ring.graded_local or not module.is_graded:
        raise UnsupportedRingError("unsupported: use localized invariants")
    if cutoff < 0:
        raise ValueError(f"Betti cutoff must be non-negative, got {cutoff}")
    complex_ = resolve(module, cutoff).complex
    return [complex_.rank(n) for n in range(cutoff + 1)]


def graded_betti_numbers(module: FPModule, cutoff: int) -> dict[tuple[int, int], int]:
    """β_{i,j}: generators of F_i in internal degree j."""
    betti_numbers(module, cutoff)
    complex_ = resolve(module, cutoff).complex
    table: dict[tuple[int, int], int] = {}
    for i in range(cutoff + 1):
        for twist in complex_.twists(i):
            table[(i, twist)] = table.get((i, twist), 0) + 1
    return table
