"""Matplotlib renderings for the report command.

Only the Agg backend is used, so figures are written straight to files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .classify import lsp_proportion_chain  # noqa: E402
from .dot import PALETTE  # noqa: E402
from .transfer import TransferSystem, components  # noqa: E402

rc = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "savefig.dpi": 150,
}


def draw_transfer_system(T: TransferSystem, ax=None, title=None, highlight=None):
    """Draw ``T`` on its grid, vertices coloured by component.

    ``highlight`` is an optional collection of edges drawn in a second colour
    (for instance the edges a witness adds on top of the hull).
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(1.2 * (T.grid.r + 1) + 0.6, 1.2 * (T.grid.s + 1) + 0.6))
    part = components(T)
    highlight = set(highlight or ())
    for u, v in T.edges():
        dist = abs(v.i - u.i) + abs(v.j - u.j)
        bend = 0.0 if dist == 1 else 0.25 if (v.i - u.i) * (v.j - u.j) == 0 else 0.1
        arrow = FancyArrowPatch(
            (u.i, u.j), (v.i, v.j),
            arrowstyle="-|>", mutation_scale=8, shrinkA=6, shrinkB=6, lw=0.8,
            connectionstyle=f"arc3,rad={bend}",
            color="#d6336c" if (u, v) in highlight else "0.25",
        )
        ax.add_patch(arrow)
    for v in T.grid.vertices:
        ax.plot(v.i, v.j, "o", ms=6, color=PALETTE[part.id_of(v) % len(PALETTE)], zorder=3)
    ax.set_xlim(-0.5, T.grid.r + 0.5)
    ax.set_ylim(-0.5, T.grid.s + 0.5)
    ax.set_xticks(range(T.grid.r + 1))
    ax.set_yticks(range(T.grid.s + 1))
    ax.set_xlabel("power of p")
    ax.set_ylabel("power of q")
    ax.set_aspect("equal")
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title)
    return ax


def save_transfer_system(T: TransferSystem, path, title=None, highlight=None):
    with plt.rc_context(rc):
        ax = draw_transfer_system(T, title=title, highlight=highlight)
        ax.figure.tight_layout()
        ax.figure.savefig(path)
        plt.close(ax.figure)


def plot_lsp_proportion(ns, path, counted=None):
    """Exact LSP proportion on chains against n, with the 5/16 limit.

    ``counted`` optionally maps n to a brute-force proportion, drawn as markers.
    """
    ns = list(ns)
    with plt.rc_context(rc):
        fig, ax = plt.subplots(figsize=(4.0, 2.8))
        ax.plot(ns, [float(lsp_proportion_chain(n)) for n in ns], "-", color=PALETTE[0], label="closed form")
        if counted:
            xs = sorted(counted)
            ax.plot(xs, [float(counted[n]) for n in xs], "o", ms=4, color=PALETTE[1], label="enumerated")
        ax.axhline(5 / 16, ls="--", lw=0.8, color="0.4", label="limit 5/16")
        ax.set_xlabel("n")
        ax.set_ylabel("LSP proportion")
        ax.legend(frameon=False)
        for side in ("top", "right"):
            ax.spines[side].set_visible(False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
