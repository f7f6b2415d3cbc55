"""Transfer systems on a grid: representation, validation, closure, components.

A transfer system is stored as a tuple of row bitmasks, ``rows[u]`` having
bit ``v`` set iff ``u -> v``.  The diagonal is always set.  Values are
immutable; every constructor that needs to grow a relation works on a
private list and freezes it at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .lattice import Edge, Grid, Vertex, leq


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class TransferSystem:
    grid: Grid
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if len(rows) != self.grid.n_vertices:
            raise InputError("row count does not match grid size")
        rows = tuple(row | (1 << u) for u, row in enumerate(rows))
        object.__setattr__(self, "rows", rows)

    # construction

    @classmethod
    def from_edges(cls, g: Grid, edges: Iterable) -> TransferSystem:
        """Build a transfer system from its strict edges, rejecting anything that is not one."""
        rows = _rows_from_edges(g, edges, allow_nonsubgroup=True)
        verdict = _validate_rows(g, rows)
        if not verdict.ok:
            raise InputError(f"not a transfer system: {verdict.violations[0]}")
        return cls(g, tuple(rows))

    @classmethod
    def diagonal(cls, g: Grid) -> TransferSystem:
        return cls(g, (0,) * g.n_vertices)

    # queries

    def has(self, u, v) -> bool:
        g = self.grid
        return bool(self.rows[g.index(u)] >> g.index(v) & 1)

    def __contains__(self, edge) -> bool:
        u, v = edge
        return self.has(u, v)

    def edge_indices(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in _bits(row & ~(1 << u)):
                yield u, v

    def edges(self) -> list[Edge]:
        """Strict edges sorted lexicographically by (src, dst)."""
        vs = self.grid.vertices
        return [Edge(vs[u], vs[v]) for u, v in self.edge_indices()]

    @property
    def n_edges(self) -> int:
        return sum(bin(row).count("1") for row in self.rows) - self.grid.n_vertices

    @property
    def mask(self) -> int:
        """Canonical bit-vector over the grid's strict comparable pairs."""
        bit = self.grid.pair_bit
        out = 0
        for pair in self.edge_indices():
            out |= 1 << bit[pair]
        return out

    @property
    def cols(self) -> tuple[int, ...]:
        n = self.grid.n_vertices
        cols = [0] * n
        for u, row in enumerate(self.rows):
            for v in _bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    def issubset(self, other: TransferSystem) -> bool:
        _same_grid(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __le__(self, other: TransferSystem) -> bool:
        return self.issubset(other)

    def __lt__(self, other: TransferSystem) -> bool:
        return self.issubset(other) and self.rows != other.rows

    def transpose(self) -> TransferSystem:
        """Swap the roles of p and q."""
        g = self.grid.transpose()
        return TransferSystem.from_edges(
            g, [((v.j, v.i), (w.j, w.i)) for v, w in self.edges()]
        )

    def __str__(self):
        body = ", ".join(str(e) for e in self.edges())
        return f"{self.grid}{{{body}}}"


def _same_grid(a: TransferSystem, b: TransferSystem) -> None:
    if a.grid != b.grid:
        raise InputError(f"grid mismatch: {a.grid} vs {b.grid}")


def _edge_indices(g: Grid, edge) -> tuple[int, int]:
    try:
        u, v = edge
    except (TypeError, ValueError):
        raise InputError(f"not an edge: {edge!r}") from None
    return g.index(u), g.index(v)


def _rows_from_edges(g: Grid, edges: Iterable, allow_nonsubgroup=False) -> list[int]:
    rows = [1 << u for u in range(g.n_vertices)]
    ups = g.up_masks
    for edge in edges:
        u, v = _edge_indices(g, edge)
        if not allow_nonsubgroup and not ups[u] >> v & 1:
            raise InputError(f"edge {g.vertex(u)}->{g.vertex(v)} violates the subgroup condition")
        rows[u] |= 1 << v
    return rows


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    missing: Edge | None
    witness: tuple[Vertex, ...]

    def __str__(self):
        w = " ".join(str(v) for v in self.witness)
        if self.missing is None:
            return f"{self.axiom}: edge {w} is not a subgroup inclusion"
        return f"{self.axiom}: missing {self.missing} (witness {w})"


@dataclass(frozen=True)
class Validation:
    ok: bool
    violations: tuple[Violation, ...] = field(default=())


def validate(g: Grid, edges: Iterable) -> Validation:
    """Check whether the reflexive closure of ``edges`` is a transfer system.

    Out-of-bounds vertices raise :class:`InputError`; axiom failures are
    returned as violations, each naming the axiom and the witnessing vertices.
    Missing edges are reported once per (axiom, edge), with the first witness
    found in lexicographic order.
    """
    rows = _rows_from_edges(g, edges, allow_nonsubgroup=True)
    return _validate_rows(g, rows)


def _validate_rows(g: Grid, rows: Sequence[int]) -> Validation:
    n = g.n_vertices
    vs = g.vertices
    ups = g.up_masks
    meet = g.meet_table
    found: list[Violation] = []
    seen: set[tuple[str, int, int]] = set()

    rows = list(rows)
    for u in range(n):
        bad = rows[u] & ~ups[u]
        for v in _bits(bad):
            found.append(Violation("subgroup", None, (vs[u], vs[v])))
        rows[u] &= ups[u]

    def miss(axiom, a, b, witness):
        if (axiom, a, b) not in seen:
            seen.add((axiom, a, b))
            found.append(Violation(axiom, Edge(vs[a], vs[b]), witness))

    for u in range(n):
        for v in _bits(rows[u] & ~(1 << u)):
            lacking = rows[v] & ~rows[u]
            for w in _bits(lacking):
                miss("transitivity", u, w, (vs[u], vs[v], vs[w]))
            for w in range(n):
                a, b = meet[u][w], meet[v][w]
                if not rows[a] >> b & 1:
                    miss("restriction", a, b, (vs[u], vs[v], vs[w]))
    return Validation(not found, tuple(found))


# ------------------------------------------------------------------- closure


def _restrict_pass(g: Grid, rows: list[int]) -> bool:
    meet = g.meet_table
    n = g.n_vertices
    changed = False
    for u in range(n):
        mu = meet[u]
        for v in _bits(rows[u] & ~(1 << u)):
            mv = meet[v]
            for w in range(n):
                a, b = mu[w], mv[w]
                if not rows[a] >> b & 1:
                    rows[a] |= 1 << b
                    changed = True
    return changed


def _transitive_pass(rows: list[int]) -> bool:
    changed = False
    n = len(rows)
    for k in range(n):
        rk = rows[k]
        bit = 1 << k
        for i in range(n):
            ri = rows[i]
            if ri & bit and rk & ~ri:
                rows[i] = ri | rk
                changed = True
    return changed


def close_rows(g: Grid, rows: list[int]) -> list[int]:
    """Round-robin fixpoint of restriction and transitivity, in place."""
    while True:
        a = _restrict_pass(g, rows)
        b = _transitive_pass(rows)
        if not (a or b):
            return rows


def close_rows_one_pass(g: Grid, rows: list[int]) -> list[int]:
    """Restriction closure followed by one transitive closure.

    Restricting a restricted edge is again a restriction, and restriction
    distributes over composition, so a single pass of each already yields a
    transfer system.  Kept as the fast path; tests pin it to :func:`close_rows`.
    """
    snapshot = [(u, v) for u, row in enumerate(rows) for v in _bits(row & ~(1 << u))]
    meet = g.meet_table
    n = g.n_vertices
    for u, v in snapshot:
        for w in range(n):
            rows[meet[u][w]] |= 1 << meet[v][w]
    _transitive_pass(rows)
    return rows


def transfer_closure(g: Grid, edges: Iterable = ()) -> TransferSystem:
    """The least transfer system on ``g`` containing ``edges``."""
    rows = _rows_from_edges(g, edges)
    return TransferSystem(g, tuple(close_rows(g, rows)))


def extend(T: TransferSystem, edges: Iterable) -> TransferSystem:
    """The least transfer system containing ``T`` and ``edges``."""
    rows = list(T.rows)
    for u, v in (_edge_indices(T.grid, e) for e in edges):
        if not T.grid.up_masks[u] >> v & 1:
            raise InputError(f"edge {T.grid.vertex(u)}->{T.grid.vertex(v)} violates the subgroup condition")
        rows[u] |= 1 << v
    return TransferSystem(T.grid, tuple(close_rows(T.grid, rows)))


# ---------------------------------------------------------------- components


@dataclass(frozen=True)
class ComponentPartition:
    grid: Grid
    component_id: tuple[int, ...]
    masks: tuple[int, ...]
    smallest: tuple[Vertex, ...]

    @property
    def count(self) -> int:
        return len(self.masks)

    @property
    def members(self) -> tuple[frozenset[Vertex], ...]:
        vs = self.grid.vertices
        return tuple(frozenset(vs[b] for b in _bits(m)) for m in self.masks)

    def id_of(self, v) -> int:
        return self.component_id[self.grid.index(v)]

    def members_of(self, v) -> frozenset[Vertex]:
        return self.members[self.id_of(v)]

    def same(self, u, v) -> bool:
        return self.id_of(u) == self.id_of(v)

    def as_sets(self) -> frozenset[frozenset[Vertex]]:
        return frozenset(self.members)


def components(T: TransferSystem) -> ComponentPartition:
    g = T.grid
    n = g.n_vertices
    cols = T.cols
    adj = [T.rows[u] | cols[u] for u in range(n)]
    ids = [-1] * n
    masks: list[int] = []
    smallest: list[Vertex] = []
    for start in range(n):
        if ids[start] >= 0:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= adj[u]
            frontier = reach & ~comp
            comp |= reach
        cid = len(masks)
        for u in _bits(comp):
            ids[u] = cid
        masks.append(comp)
        # start is the lowest flat index in comp, hence the lexicographic minimum
        smallest.append(g.vertex(start))
    return ComponentPartition(g, tuple(ids), tuple(masks), tuple(smallest))


def zigzag_path(T: TransferSystem, u, v) -> tuple[Vertex, ...] | None:
    """A path ``u <- w -> v`` through a common source, or None across components.

    Returns ``()`` when ``u == v``.  Either leg may be an identity edge, in
    which case ``w`` equals one of the endpoints.
    """
    g = T.grid
    a, b = g.index(u), g.index(v)
    if a == b:
        return ()
    cols = T.cols
    common = cols[a] & cols[b]
    if common:
        w = (common & -common).bit_length() - 1
        return (g.vertex(a), g.vertex(w), g.vertex(b))
    ids = components(T).component_id
    if ids[a] == ids[b]:
        raise AssertionError(f"no length-two zigzag between {u} and {v} in {T}")
    return None


def smallest_vertex(T: TransferSystem, v) -> Vertex:
    p = components(T)
    return p.smallest[p.id_of(v)]
