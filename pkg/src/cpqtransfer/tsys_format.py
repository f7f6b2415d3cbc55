"""The ``.tsys`` text format and its JSON mirror.

Text format::

    # comment
    grid 2 1
    name optional label
    0 0 -> 1 0
    0 0 -> 0 1

Edges are strict; reflexive lines are dropped with a warning.  JSON is
``{"r": R, "s": S, "edges": [[[i1, j1], [i2, j2]], ...]}`` with edges in
canonical (src, dst) order, plus ``"name"`` when one is set.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field

from .errors import InputError, ParseError
from .lattice import Edge, Grid, Vertex

log = logging.getLogger(__name__)

_GRID = re.compile(r"^grid\s+(\d+)\s+(\d+)$")
_NAME = re.compile(r"^name\s+(.+)$")
_EDGE = re.compile(r"^(\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)$")


@dataclass(frozen=True)
class TsysDocument:
    grid: Grid
    edges: tuple[Edge, ...]
    name: str | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)


def parse_tsys(text: str) -> TsysDocument:
    if text.lstrip().startswith("{"):
        return parse_json(text)
    grid = None
    name = None
    edges: list[Edge] = []
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if grid is None:
            m = _GRID.match(line)
            if not m:
                raise ParseError(f"expected 'grid R S', got {line!r}", lineno)
            grid = Grid(int(m[1]), int(m[2]))
            continue
        m = _NAME.match(line)
        if m:
            name = m[1].strip()
            continue
        m = _EDGE.match(line)
        if not m:
            raise ParseError(f"expected 'i j -> k l', got {line!r}", lineno)
        u = Vertex(int(m[1]), int(m[2]))
        v = Vertex(int(m[3]), int(m[4]))
        for w in (u, v):
            if not grid.contains(w):
                raise ParseError(f"vertex {w} outside {grid}", lineno)
        if u == v:
            msg = f"line {lineno}: reflexive edge {u}->{v} ignored"
            log.warning(msg)
            warnings.append(msg)
            continue
        edges.append(Edge(u, v))
    if grid is None:
        raise ParseError("missing 'grid R S' header")
    return TsysDocument(grid, tuple(sorted(set(edges))), name, tuple(warnings))


def render_tsys(doc: TsysDocument) -> str:
    lines = [f"grid {doc.grid.r} {doc.grid.s}"]
    if doc.name:
        lines.append(f"name {doc.name}")
    for u, v in sorted(doc.edges):
        lines.append(f"{u.i} {u.j} -> {v.i} {v.j}")
    return "\n".join(lines) + "\n"


def to_json_obj(doc: TsysDocument) -> dict:
    obj = {
        "r": doc.grid.r,
        "s": doc.grid.s,
        "edges": [[[u.i, u.j], [v.i, v.j]] for u, v in sorted(doc.edges)],
    }
    if doc.name:
        obj["name"] = doc.name
    return obj


def render_json(doc: TsysDocument) -> str:
    return json.dumps(to_json_obj(doc), sort_keys=True)


def parse_json(text: str) -> TsysDocument:
    try:
        obj = json.loads(text)
        grid = Grid(int(obj["r"]), int(obj["s"]))
        edges = []
        for item in obj.get("edges", []):
            (a, b), (c, d) = item
            u, v = grid.check((a, b)), grid.check((c, d))
            if u != v:
                edges.append(Edge(u, v))
    except InputError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON document: {exc}") from None
    return TsysDocument(grid, tuple(sorted(set(edges))), obj.get("name"))


def document(T, name=None) -> TsysDocument:
    return TsysDocument(T.grid, tuple(T.edges()), name)


def swap_pq(doc: TsysDocument) -> TsysDocument:
    """Exchange the roles of the two primes."""
    edges = tuple(sorted(Edge(Vertex(u.j, u.i), Vertex(v.j, v.i)) for u, v in doc.edges))
    return TsysDocument(doc.grid.transpose(), edges, doc.name, doc.warnings)


def load(path, swap=False) -> TsysDocument:
    with open(path, encoding="utf-8") as fh:
        doc = parse_tsys(fh.read())
    return swap_pq(doc) if swap else doc
