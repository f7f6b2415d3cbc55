"""Graphviz export with nodes pinned to their grid coordinates."""

from __future__ import annotations

from .transfer import TransferSystem, components

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _node(v) -> str:
    return f"v{v.i}_{v.j}"


def export_dot(T: TransferSystem, color_components: bool = False, name: str = "T", scale: float = 1.5) -> str:
    """DOT text for ``T``; reflexive edges are omitted.

    Positions use ``pos="x,y!"`` so ``neato -n`` or ``fdp`` reproduce the
    grid layout.  Output depends only on ``T`` and the options.
    """
    part = components(T) if color_components else None
    lines = [f'digraph "{name}" {{', "  node [shape=circle, fontsize=10];"]
    for v in T.grid.vertices:
        attrs = [f'label="({v.i},{v.j})"', f'pos="{v.i * scale:g},{v.j * scale:g}!"']
        if part is not None:
            colour = PALETTE[part.id_of(v) % len(PALETTE)]
            attrs.append(f'color="{colour}"')
        lines.append(f"  {_node(v)} [{', '.join(attrs)}];")
    for u, v in T.edges():
        lines.append(f"  {_node(u)} -> {_node(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
