"""
Constructions on complexes: shift, direct sum, mapping cone, multiplication
maps, total Hom and tensor complexes with a free first argument, Koszul
complexes and truncations.

Sign conventions: ∂(x ⊗ y) = ∂x ⊗ y + (-1)^|x| x ⊗ ∂y and
∂(f) = ∂ ∘ f - (-1)^|f| f ∘ ∂.
"""

from itertools import combinations

from semidual.errors import RingMismatchError
from semidual.logging import setup_logger
from semidual.modules import ChainMap, FPModule, FreeComplex, Matrix, ModuleComplex
from semidual.ring import QuotientRing

logger = setup_logger()


def _check_rings(*complexes):
    ring = complexes[0].ring
    for other in complexes[1:]:
        if other.ring != ring:
            raise RingMismatchError(
                f"Complexes over {ring.describe()} and {other.ring.describe()} cannot be combined"
            )
    return ring


def _build(ring, modules, differentials, name, free: bool) -> ModuleComplex:
    if free:
        twists = {n: m.twists for n, m in modules.items()}
        return FreeComplex(ring, twists, differentials, name, check=False)
    return ModuleComplex(ring, modules, differentials, name, check=False)


def shift(complex_: ModuleComplex, k: int) -> ModuleComplex:
    """Σ^k X."""
    return complex_.shift(k)


def direct_sum(*complexes: ModuleComplex) -> ModuleComplex:
    ring = _check_rings(*complexes)
    lo = min(c.lo for c in complexes)
    hi = max(c.hi for c in complexes)
    modules = {}
    differentials = {}
    for n in range(lo, hi + 1):
        parts = [c.module(n) for c in complexes]
        modules[n] = parts[0].direct_sum(*parts[1:])
        if n > lo:
            differentials[n] = Matrix.block_diagonal(ring, [c.differential(n) for c in complexes])
    name = " ⊕ ".join(c.label() for c in complexes)
    free = all(c.is_free for c in complexes)
    return _build(ring, modules, differentials, name, free)


def cone(chain_map: ChainMap) -> ModuleComplex:
    """
    The mapping cone of f: X -> Y, cone_n = X_{n-1} ⊕ Y_n with
    ∂ = [[-∂X, 0], [f, ∂Y]]. f is a quasi-isomorphism iff the cone is exact.
    """
    source, target = chain_map.source, chain_map.target
    ring = _check_rings(source, target)
    lo = min(source.lo + 1, target.lo)
    hi = max(source.hi + 1, target.hi)
    modules = {n: source.module(n - 1).direct_sum(target.module(n)) for n in range(lo, hi + 1)}
    differentials = {}
    for n in range(lo + 1, hi + 1):
        differentials[n] = Matrix.block(
            ring,
            [source.module(n - 2).ngens, target.module(n - 1).ngens],
            [source.module(n - 1).ngens, target.module(n).ngens],
            {
                (0, 0): -source.differential(n - 1),
                (1, 0): chain_map.component(n - 1),
                (1, 1): target.differential(n),
            },
        )
    free = source.is_free and target.is_free
    return _build(ring, modules, differentials, f"cone({source.label()} -> {target.label()})", free)


def multiplication(complex_: ModuleComplex, element) -> ChainMap:
    """
    Multiplication by `element` as a degree-0 chain map X(-d) -> X, where d
    is the degree of the element.
    """
    ring = complex_.ring
    degree = ring.cover.degree(element) or 0
    modules = {n: m.twisted(degree) for n, m in complex_.modules.items()}
    source = ModuleComplex(
        ring, modules, dict(complex_.differentials), f"{complex_.label()}(-{degree})", check=False
    )
    components = {
        n: Matrix.identity(ring, complex_.module(n).ngens).scale(element)
        for n in complex_.indices()
    }
    return ChainMap(source, complex_, components, check=False)


def _free_blocks(free: FreeComplex, n: int, other: ModuleComplex, offset) -> list[tuple]:
    """(i, twist of each copy, module) for every summand of the total complex in degree n."""
    blocks = []
    for i in free.indices():
        module = other.module(offset(i, n))
        if free.rank(i) and module.ngens:
            blocks.append((i, free.twists(i), module))
    return blocks


def _blocks_module(ring: QuotientRing, blocks, sign: int) -> FPModule:
    summands = []
    for _, twists, module in blocks:
        for twist in twists:
            summands.append(module.twisted(sign * twist))
    if not summands:
        return FPModule.zero(ring)
    return summands[0].direct_sum(*summands[1:])


def _total_differential(ring, source_blocks, target_blocks, component) -> Matrix:
    row_sizes = [len(t) * m.ngens for _, t, m in target_blocks]
    col_sizes = [len(t) * m.ngens for _, t, m in source_blocks]
    row_index = {i: r for r, (i, _, _) in enumerate(target_blocks)}
    pieces = {}
    for c, (i, _, _) in enumerate(source_blocks):
        for target_i, matrix in component(i):
            r = row_index.get(target_i)
            if r is not None and matrix.shape == (row_sizes[r], col_sizes[c]):
                pieces[(r, c)] = matrix
    return Matrix.block(ring, row_sizes, col_sizes, pieces)


def hom_complex(free: FreeComplex, other: ModuleComplex) -> ModuleComplex:
    """
    Hom(F, C) for a bounded free F: Hom(F, C)_n = ⊕_i C_{i+n}^{rank F_i}, the
    copy for a generator of degree t twisted by -t.
    """
    ring = _check_rings(free, other)
    if not free.modules or not other.modules:
        return FreeComplex.zero(ring)
    lo = other.lo - free.hi
    hi = other.hi - free.lo

    def offset(i, n):
        return i + n

    blocks = {n: _free_blocks(free, n, other, offset) for n in range(lo, hi + 1)}
    modules = {n: _blocks_module(ring, blocks[n], -1) for n in range(lo, hi + 1)}
    differentials = {}
    for n in range(lo + 1, hi + 1):
        sign = -1 if n % 2 == 0 else 1

        def component(i, n=n, sign=sign):
            copies = free.rank(i)
            yield i, other.differential(i + n).repeat(copies)
            if free.rank(i + 1):
                size = other.module(i + n).ngens
                yield i + 1, free.differential(i + 1).transpose().expand(size).scale(sign)

        differentials[n] = _total_differential(ring, blocks[n], blocks[n - 1], component)
    name = f"Hom({free.label()}, {other.label()})"
    return _build(ring, modules, differentials, name, other.is_free)


def tensor_complex(free: FreeComplex, other: ModuleComplex) -> ModuleComplex:
    """F ⊗ Y for a bounded free F: (F ⊗ Y)_n = ⊕_i Y_{n-i}^{rank F_i}."""
    ring = _check_rings(free, other)
    if not free.modules or not other.modules:
        return FreeComplex.zero(ring)
    lo = free.lo + other.lo
    hi = free.hi + other.hi

    def offset(i, n):
        return n - i

    blocks = {n: _free_blocks(free, n, other, offset) for n in range(lo, hi + 1)}
    modules = {n: _blocks_module(ring, blocks[n], 1) for n in range(lo, hi + 1)}
    differentials = {}
    for n in range(lo + 1, hi + 1):

        def component(i, n=n):
            size = other.module(n - i).ngens
            if free.rank(i - 1):
                yield i - 1, free.differential(i).expand(size)
            sign = -1 if i % 2 else 1
            yield i, other.differential(n - i).repeat(free.rank(i)).scale(sign)

        differentials[n] = _total_differential(ring, blocks[n], blocks[n - 1], component)
    name = f"{free.label()} ⊗ {other.label()}"
    return _build(ring, modules, differentials, name, other.is_free)


def koszul(ring: QuotientRing, elements, name: str = "") -> FreeComplex:
    """K(x_1, ..., x_r): K_i has a basis e_S for i-subsets S, ∂e_S = Σ ±x_s e_{S - s}."""
    elements = [ring.reduce(ring.cover.check(x)) for x in elements]
    degrees = [ring.cover.degree(x) or 0 for x in elements]
    r = len(elements)
    bases = {i: list(combinations(range(r), i)) for i in range(r + 1)}
    twists = {i: tuple(sum(degrees[s] for s in subset) for subset in bases[i]) for i in bases}
    differentials = {}
    for i in range(1, r + 1):
        index = {subset: k for k, subset in enumerate(bases[i - 1])}
        columns = []
        for subset in bases[i]:
            column = [ring.zero] * len(bases[i - 1])
            for position, s in enumerate(subset):
                face = subset[:position] + subset[position + 1 :]
                term = elements[s] if position % 2 == 0 else -elements[s]
                column[index[face]] = term
            columns.append(tuple(column))
        differentials[i] = Matrix.from_columns(ring, len(bases[i - 1]), columns)
    label = name or "K(" + ", ".join(ring.format(x) for x in elements) + ")"
    return FreeComplex(ring, twists, differentials, label, check=False)


def truncate_above(complex_: ModuleComplex, top: int) -> ModuleComplex:
    """
    Soft truncation τ_{≤top}: degrees below top unchanged, X_top replaced by
    X_top / im ∂_{top+1}. Homology is kept in degrees ≤ top.
    """
    modules = {n: m for n, m in complex_.modules.items() if n < top}
    differentials = {n: d for n, d in complex_.differentials.items() if n <= top}
    module = complex_.module(top)
    if module.ngens:
        extra = tuple(c for c in complex_.differential(top + 1).columns)
        modules[top] = FPModule(complex_.ring, module.twists, module.relations + extra, module.name)
    name = f"τ≤{top}({complex_.label()})"
    return ModuleComplex(complex_.ring, modules, differentials, name, check=False)


def truncate_free(free: FreeComplex, lo: int, hi: int) -> FreeComplex:
    """Hard truncation: keep F_n for lo ≤ n ≤ hi."""
    twists = {n: free.twists(n) for n in range(lo, hi + 1) if free.rank(n)}
    differentials = {n: d for n, d in free.differentials.items() if lo < n <= hi}
    return FreeComplex(free.ring, twists, differentials, free.name, check=False)


def base_change_complex(complex_: ModuleComplex, ring: QuotientRing) -> ModuleComplex:
    """Termwise X ⊗_R S for S a quotient of R sharing the cover."""
    if complex_.is_free:
        return FreeComplex.from_module_complex(complex_).change_ring(ring)
    return complex_.change_ring(ring)
