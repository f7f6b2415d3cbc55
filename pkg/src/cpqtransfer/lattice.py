"""The subgroup lattice of C_{p^r q^s} as an (r+1) x (s+1) grid.

A vertex ``(i, j)`` stands for the subgroup of order ``p^i q^j``.  Inclusion
of subgroups is the coordinatewise order and intersection is the
coordinatewise minimum.  Vertices are addressed by the flat index
``i * (s + 1) + j``, which also enumerates them in lexicographic order, so a
single integer serves both as a bit position and as a sort key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import InputError


class Vertex(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"({self.i},{self.j})"


class Edge(NamedTuple):
    src: Vertex
    dst: Vertex

    def __str__(self):
        return f"{self.src}->{self.dst}"


def leq(u, v) -> bool:
    """Subgroup inclusion: ``u`` lies weakly below and left of ``v``."""
    return u[0] <= v[0] and u[1] <= v[1]


def meet(u, v) -> Vertex:
    return Vertex(min(u[0], v[0]), min(u[1], v[1]))


def lex_less(u, v) -> bool:
    """Strict lexicographic order: up each column, then left to right."""
    return (u[0], u[1]) < (v[0], v[1])


@dataclass(frozen=True)
class Grid:
    r: int
    s: int

    def __post_init__(self):
        if not isinstance(self.r, int) or not isinstance(self.s, int):
            raise InputError(f"grid exponents must be integers, got {self.r!r}, {self.s!r}")
        if self.r < 0 or self.s < 0:
            raise InputError(f"grid exponents must be non-negative, got ({self.r}, {self.s})")

    @property
    def n_vertices(self) -> int:
        return (self.r + 1) * (self.s + 1)

    @property
    def is_chain(self) -> bool:
        return self.r == 0 or self.s == 0

    @property
    def bottom(self) -> Vertex:
        return Vertex(0, 0)

    @property
    def top(self) -> Vertex:
        return Vertex(self.r, self.s)

    def contains(self, v) -> bool:
        return 0 <= v[0] <= self.r and 0 <= v[1] <= self.s

    def check(self, v) -> Vertex:
        """Return ``v`` as a Vertex, raising InputError when it is off the grid."""
        try:
            i, j = v
        except (TypeError, ValueError):
            raise InputError(f"not a vertex: {v!r}") from None
        if not (isinstance(i, int) and isinstance(j, int)) or not self.contains((i, j)):
            raise InputError(f"vertex {v!r} outside grid({self.r},{self.s})")
        return Vertex(i, j)

    def index(self, v) -> int:
        v = self.check(v)
        return v.i * (self.s + 1) + v.j

    def vertex(self, index: int) -> Vertex:
        return self.vertices[index]

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices)

    def leq(self, u, v) -> bool:
        return leq(self.check(u), self.check(v))

    def meet(self, u, v) -> Vertex:
        return meet(self.check(u), self.check(v))

    def lex_less(self, u, v) -> bool:
        return lex_less(self.check(u), self.check(v))

    def transpose(self) -> Grid:
        return Grid(self.s, self.r)

    # Precomputed tables, indexed by flat vertex index.

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(Vertex(i, j) for i in range(self.r + 1) for j in range(self.s + 1))

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        vs = self.vertices
        w = self.s + 1
        return tuple(
            tuple(min(u.i, v.i) * w + min(u.j, v.j) for v in vs) for u in vs
        )

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """``up_masks[u]`` has bit ``v`` set iff ``u <= v``."""
        vs = self.vertices
        return tuple(
            sum(1 << b for b, v in enumerate(vs) if leq(u, v)) for u in vs
        )

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(
            sum(1 << b for b, v in enumerate(vs) if leq(v, u)) for u in vs
        )

    @cached_property
    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        """All comparable pairs ``u < v`` as flat indices, in lexicographic (src, dst) order."""
        n = self.n_vertices
        ups = self.up_masks
        return tuple((u, v) for u in range(n) for v in range(n) if u != v and ups[u] >> v & 1)

    @cached_property
    def pair_bit(self) -> dict[tuple[int, int], int]:
        return {pair: k for k, pair in enumerate(self.strict_pairs)}

    def __str__(self):
        return f"grid({self.r},{self.s})"


def chain(n: int) -> Grid:
    """The subgroup lattice of C_{p^n}."""
    return Grid(n, 0)


def complete_relation(g: Grid):
    """The transfer system containing every edge ``u -> v`` with ``u <= v``."""
    from .transfer import TransferSystem

    return TransferSystem(g, g.up_masks)
