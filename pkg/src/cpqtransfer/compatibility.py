"""Compatible pairs (T, T'), minimal compatible extensions and the chain core.

``(T, T')`` is compatible when ``T`` is contained in ``T'`` and, for every
``B -> A`` in ``T`` and every ``C <= A`` with ``B & C -> B`` in ``T'``, the
edge ``C -> A`` lies in ``T'``.  The checker and the extension closure both
quantify over every such triple; the reduction to incomparable ``B, C`` is
only asserted in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, PreconditionError
from .lattice import Edge, Vertex
from .transfer import (
    TransferSystem,
    _bits,
    _edge_indices,
    _same_grid,
    close_rows,
    close_rows_one_pass,
    transfer_closure,
)


@dataclass(frozen=True)
class CompatViolation:
    A: Vertex
    B: Vertex
    C: Vertex
    BmeetC: Vertex

    def __str__(self):
        return f"A={self.A} B={self.B} C={self.C} B&C={self.BmeetC}"


@dataclass(frozen=True)
class CompatReport:
    verdict: bool
    violations: tuple[CompatViolation, ...]
    not_contained: tuple[Edge, ...]

    def __bool__(self):
        return self.verdict


def _compat_violations(T: TransferSystem, Tp: TransferSystem, first_only=False):
    g = T.grid
    meet = g.meet_table
    downs = g.down_masks
    prows = Tp.rows
    pcols = Tp.cols
    for b, a in T.edge_indices():
        # C ranges over the subgroups of A that T' does not already send to A
        for c in _bits(downs[a] & ~pcols[a]):
            m = meet[b][c]
            if prows[m] >> b & 1:
                yield a, b, c, m
                if first_only:
                    return


def is_compatible(T: TransferSystem, Tp: TransferSystem) -> CompatReport:
    _same_grid(T, Tp)
    vs = T.grid.vertices
    not_contained = tuple(e for e in T.edges() if e not in Tp)
    violations = tuple(
        CompatViolation(vs[a], vs[b], vs[c], vs[m])
        for a, b, c, m in sorted(_compat_violations(T, Tp))
    )
    return CompatReport(not (violations or not_contained), violations, not_contained)


def compatible(T: TransferSystem, Tp: TransferSystem) -> bool:
    """Fast boolean form of :func:`is_compatible`."""
    if not T.issubset(Tp):
        return False
    for _ in _compat_violations(T, Tp, first_only=True):
        return False
    return True


def _compat_pass(T: TransferSystem, rows: list[int]) -> bool:
    g = T.grid
    meet = g.meet_table
    downs = g.down_masks
    changed = False
    for b, a in T.edge_indices():
        for c in _bits(downs[a]):
            if not rows[c] >> a & 1 and rows[meet[b][c]] >> b & 1:
                rows[c] |= 1 << a
                changed = True
    return changed


def _check_edges(T: TransferSystem, S: Iterable) -> list[tuple[int, int]]:
    g = T.grid
    out = []
    for e in S:
        u, v = _edge_indices(g, e)
        if not g.up_masks[u] >> v & 1:
            raise InputError(f"edge {g.vertex(u)}->{g.vertex(v)} violates the subgroup condition")
        out.append((u, v))
    return out


def extension_fixpoint(T: TransferSystem, S: Iterable = ()) -> TransferSystem:
    """Least fixpoint of restriction, transitivity and the compatibility rule over T and S."""
    rows = list(T.rows)
    for u, v in _check_edges(T, S):
        rows[u] |= 1 << v
    while True:
        close_rows(T.grid, rows)
        if not _compat_pass(T, rows):
            return TransferSystem(T.grid, tuple(rows))


def extension_one_pass(T: TransferSystem, S: Iterable) -> TransferSystem:
    """Restriction, then transitivity, then a single compatibility round.

    Valid only when every edge of ``S`` starts at the bottom vertex.
    """
    edges = _check_edges(T, S)
    if any(u != 0 for u, _ in edges):
        raise PreconditionError("one-pass extension needs every added edge to start at (0,0)")
    rows = list(T.rows)
    for u, v in edges:
        rows[u] |= 1 << v
    close_rows_one_pass(T.grid, rows)
    _compat_pass(T, rows)
    return TransferSystem(T.grid, tuple(rows))


def min_compatible_extension(T: TransferSystem, S: Iterable = ()) -> TransferSystem:
    """The least transfer system containing ``T`` and ``S`` that is compatible with ``T``."""
    S = list(S)
    result = extension_fixpoint(T, S)
    if S and all(_edge_indices(T.grid, e)[0] == 0 for e in S):
        quick = extension_one_pass(T, S)
        assert quick == result, "one-pass and fixpoint extensions disagree"
    return result


def core_chain(T: TransferSystem) -> TransferSystem:
    """Sub-transfer system generated by the unit edges ``k -> k+1`` of a chain."""
    g = T.grid
    if not g.is_chain:
        raise PreconditionError(f"core is only defined on chains, got {g}")
    n = g.n_vertices
    # on a chain the flat index is the position along the chain
    units = [
        (g.vertex(k), g.vertex(k + 1)) for k in range(n - 1) if T.rows[k] >> (k + 1) & 1
    ]
    return transfer_closure(g, units)


def compatible_supersets(T: TransferSystem, max_vertices: int = 12) -> list[TransferSystem]:
    """Every T' containing T with (T, T') compatible, in canonical order.

    Compatibility forces ``Hull(T) <= T'``, so the search enumerates the
    supersets of the hull and filters them.
    """
    from .enumeration import enumerate_transfer_systems
    from .saturation import hull

    base = hull(T)
    return [
        Tp
        for Tp in enumerate_transfer_systems(T.grid, max_vertices=max_vertices, containing=base)
        if compatible(T, Tp)
    ]
