"""
Dictionary form of complexes, shared by JSON reports and YAML suite files.

    {lo, hi, ranks: [...], twists: [[...]], differentials: [matrix-text]}

`differentials[k]` is ∂_{lo+k+1} in the "a; b | c; d" matrix format (rows
are target generators). Complexes of non-free modules add
`relations: [matrix-text]`, one presentation per degree (rows are relations).
"""

from semidual.logging import setup_logger
from semidual.modules import FPModule, FreeComplex, Matrix, ModuleComplex
from semidual.ring import QuotientRing

logger = setup_logger()


def complex_to_dict(complex_: ModuleComplex) -> dict:
    lo, hi = complex_.lo, complex_.hi
    data = {
        "lo": lo,
        "hi": hi,
        "ranks": [complex_.module(n).ngens for n in range(lo, hi + 1)],
        "twists": [list(complex_.twists(n)) for n in range(lo, hi + 1)],
        "differentials": [complex_.differential(n).to_text() for n in range(lo + 1, hi + 1)],
    }
    if not complex_.is_free:
        data["relations"] = [
            complex_.module(n).presentation_matrix().to_text()
            if complex_.module(n).relations
            else ""
            for n in range(lo, hi + 1)
        ]
    return data


def complex_from_dict(ring: QuotientRing, data: dict, name: str = "") -> ModuleComplex:
    """Inverse of complex_to_dict; validates ∂∂ = 0 and the shapes."""
    try:
        lo = int(data.get("lo", 0))
        ranks = [int(r) for r in data["ranks"]]
    except (KeyError, TypeError, ValueError) as e:
        logger.error(f"Malformed complex data: {e}")
        raise ValueError(f"Complex needs integer 'lo' and a 'ranks' list: {e}") from e
    hi = int(data.get("hi", lo + len(ranks) - 1))
    if hi - lo + 1 != len(ranks):
        raise ValueError(f"Complex range [{lo}, {hi}] does not match {len(ranks)} ranks")
    twists_data = data.get("twists") or [[0] * r for r in ranks]
    if len(twists_data) != len(ranks) or any(len(t) != r for t, r in zip(twists_data, ranks)):
        raise ValueError("Complex twists do not match its ranks")
    twists = {lo + k: tuple(int(x) for x in t) for k, t in enumerate(twists_data)}

    texts = data.get("differentials") or []
    if len(texts) > max(len(ranks) - 1, 0):
        raise ValueError(f"Complex has {len(texts)} differentials for {len(ranks)} degrees")
    differentials = {}
    for k, text in enumerate(texts):
        n = lo + k + 1
        rows, cols = ranks[k], ranks[k + 1]
        differentials[n] = Matrix.parse(ring, text or "", rows, cols)

    relation_texts = data.get("relations")
    if not relation_texts:
        return FreeComplex(ring, twists, differentials, name)
    modules = {}
    for k, text in enumerate(relation_texts):
        n = lo + k
        presentation = Matrix.parse(ring, text or "", None, ranks[k]) if text else None
        rows = presentation.row_list() if presentation is not None else []
        modules[n] = FPModule(ring, twists[n], tuple(rows))
    return ModuleComplex(ring, modules, differentials, name)
