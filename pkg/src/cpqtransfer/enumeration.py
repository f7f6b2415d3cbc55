"""Exhaustive generation and counting of transfer systems on small grids.

The search walks the strict comparable pairs in lexicographic order and
decides each one in or out.  Including a pair closes the relation under
restriction and transitivity; a branch dies as soon as the closure drags in
a pair that an earlier decision excluded.  Every leaf is therefore a
distinct transfer system and every transfer system is reached once.

Canonical order is ascending :attr:`TransferSystem.mask`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable

from .errors import InputError, ResourceGuardError
from .lattice import Grid
from .transfer import TransferSystem, _transitive_pass, _validate_rows

DEFAULT_MAX_VERTICES = 12


def _guard(g: Grid, max_vertices: int) -> None:
    if g.n_vertices > max_vertices:
        raise ResourceGuardError(
            f"{g} has {g.n_vertices} vertices, above the enumeration guard of {max_vertices}"
        )


def _add_closed(g: Grid, rows: list[int], u: int, v: int) -> None:
    """Add ``u -> v`` to a transfer system held in ``rows`` and re-close it in place."""
    mu, mv = g.meet_table[u], g.meet_table[v]
    for w in range(g.n_vertices):
        rows[mu[w]] |= 1 << mv[w]
    _transitive_pass(rows)


def _search(g: Grid, start: tuple[int, ...]):
    pairs = g.strict_pairs
    n = g.n_vertices
    out: list[tuple[int, ...]] = []
    excluded = [0] * n

    def walk(k: int, rows: list[int]):
        while k < len(pairs) and rows[pairs[k][0]] >> pairs[k][1] & 1:
            k += 1
        if k == len(pairs):
            out.append(tuple(rows))
            return
        u, v = pairs[k]
        excluded[u] |= 1 << v
        walk(k + 1, rows)
        excluded[u] &= ~(1 << v)

        grown = rows.copy()
        _add_closed(g, grown, u, v)
        if not any(grown[x] & excluded[x] for x in range(n)):
            walk(k + 1, grown)

    walk(0, list(start))
    return out


@lru_cache(maxsize=None)
def _all_systems(g: Grid) -> tuple[TransferSystem, ...]:
    found = [TransferSystem(g, rows) for rows in _search(g, TransferSystem.diagonal(g).rows)]
    return tuple(sorted(found, key=lambda t: t.mask))


def enumerate_transfer_systems(
    g: Grid,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    containing: TransferSystem | None = None,
) -> list[TransferSystem]:
    """Every transfer system on ``g`` (optionally only those containing ``containing``)."""
    _guard(g, max_vertices)
    if containing is None:
        return list(_all_systems(g))
    if containing.grid != g:
        raise InputError(f"grid mismatch: {containing.grid} vs {g}")
    found = [TransferSystem(g, rows) for rows in _search(g, containing.rows)]
    found.sort(key=lambda t: t.mask)
    return found


def naive_transfer_systems(g: Grid, max_pairs: int = 16) -> list[TransferSystem]:
    """Reference enumerator: test every subset of the strict comparable pairs."""
    pairs = g.strict_pairs
    if len(pairs) > max_pairs:
        raise ResourceGuardError(f"{g} has {len(pairs)} candidate edges, above {max_pairs}")
    found = []
    for size in range(len(pairs) + 1):
        for subset in combinations(pairs, size):
            rows = [1 << u for u in range(g.n_vertices)]
            for u, v in subset:
                rows[u] |= 1 << v
            if _validate_rows(g, rows).ok:
                found.append(TransferSystem(g, tuple(rows)))
    found.sort(key=lambda t: t.mask)
    return found


def count_transfer_systems(g: Grid, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return len(enumerate_transfer_systems(g, max_vertices))


def count_compatible_pairs(g: Grid, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Number of pairs ``(T, T')`` with ``T <= T'`` compatible."""
    from .compatibility import compatible_supersets

    return sum(
        len(compatible_supersets(T, max_vertices))
        for T in enumerate_transfer_systems(g, max_vertices)
    )


FILTERS = ("saturated", "connected", "lsp")


def filter_predicate(name: str) -> Callable[[TransferSystem], bool]:
    from .classify import is_lsp_fast
    from .saturation import is_connected, is_saturated

    preds = {
        "saturated": lambda t: is_saturated(t).saturated,
        "connected": is_connected,
        "lsp": lambda t: is_lsp_fast(t).is_lsp,
    }
    if name not in preds:
        raise InputError(f"unknown filter {name!r}; expected one of {', '.join(FILTERS)}")
    return preds[name]


def count_filtered(g: Grid, filter: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    pred = filter_predicate(filter)
    return sum(1 for t in enumerate_transfer_systems(g, max_vertices) if pred(t))
