"""Saturation (two-out-of-three) and the saturated hull."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Vertex, complete_relation
from .transfer import TransferSystem, _bits, close_rows, components


@dataclass(frozen=True)
class SaturationReport:
    saturated: bool
    witness: tuple[Vertex, Vertex, Vertex] | None
    violations: tuple[tuple[Vertex, Vertex, Vertex], ...]

    def __bool__(self):
        return self.saturated


def _saturation_violations(T: TransferSystem):
    """Triples (L, K, H) with L -> H in T, L <= K <= H and K -> H missing, in lexicographic order."""
    g = T.grid
    ups, downs = g.up_masks, g.down_masks
    cols = T.cols
    for low in range(g.n_vertices):
        for mid in _bits(ups[low] & ~(1 << low)):
            for high in _bits(T.rows[low] & ups[mid] & ~(1 << mid)):
                if not cols[high] >> mid & 1:
                    yield low, mid, high


def is_saturated(T: TransferSystem) -> SaturationReport:
    vs = T.grid.vertices
    found = tuple(
        (vs[a], vs[b], vs[c]) for a, b, c in _saturation_violations(T)
    )
    return SaturationReport(not found, found[0] if found else None, found)


def hull(T: TransferSystem) -> TransferSystem:
    """Componentwise-complete relation: ``u -> v`` iff ``u <= v`` within one component."""
    g = T.grid
    part = components(T)
    ups = g.up_masks
    rows = tuple(ups[u] & part.masks[cid] for u, cid in enumerate(part.component_id))
    return TransferSystem(g, rows)


def hull_fixpoint(T: TransferSystem) -> TransferSystem:
    """Least saturated transfer system containing ``T``, by direct iteration.

    Alternates the saturation rule with restriction/transitivity closure
    until nothing changes.  Independent of the component argument used by
    :func:`hull`; tests treat it as ground truth.
    """
    g = T.grid
    ups, downs = g.up_masks, g.down_masks
    rows = list(T.rows)
    while True:
        changed = False
        for low in range(g.n_vertices):
            for high in _bits(rows[low] & ~(1 << low)):
                for mid in _bits(ups[low] & downs[high]):
                    if not rows[mid] >> high & 1:
                        rows[mid] |= 1 << high
                        changed = True
        before = tuple(rows)
        close_rows(g, rows)
        if not changed and tuple(rows) == before:
            return TransferSystem(g, tuple(rows))


def is_connected(T: TransferSystem) -> bool:
    return components(T).count == 1


def hull_is_complete(T: TransferSystem) -> bool:
    return hull(T) == complete_relation(T.grid)
