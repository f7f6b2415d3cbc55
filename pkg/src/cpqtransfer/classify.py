"""Component shapes and the lesser-simply-paired (LSP) decision.

A transfer system is LSP when the only transfer systems it is compatible
with are its saturated hull and the complete one.  :func:`is_lsp_fast`
decides this from the number and shape of components, building an explicit
counter-witness whenever the answer is no; :func:`is_lsp_oracle` checks the
definition literally by enumerating every compatible superset.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from decimal import ROUND_HALF_UP, Decimal

from .compatibility import compatible_supersets, min_compatible_extension
from .errors import InputError
from .lattice import Vertex, complete_relation
from .saturation import hull
from .transfer import TransferSystem, components


@dataclass(frozen=True)
class Shape:
    """One of ``V``, ``H``, ``L``, ``Rectangle`` or ``Irregular``.

    ``V(l)`` is columns 0..l (l < r), ``H(k)`` rows 0..k (k < s) and
    ``L(l, k)`` their union.  ``Rectangle`` carries its corner vertices.
    """

    kind: str
    params: tuple = ()

    def __str__(self):
        if self.kind == "V":
            return f"V{self.params[0]}"
        if self.kind == "H":
            return f"H{self.params[0]}"
        if self.kind == "L":
            return f"L({self.params[0]},{self.params[1]})"
        if self.kind == "Rectangle":
            lo, hi = self.params
            return f"Rectangle[{lo}..{hi}]"
        return "Irregular"


def Vl(l):
    return Shape("V", (l,))


def Hk(k):
    return Shape("H", (k,))


def Lshape(l, k):
    return Shape("L", (l, k))


def Rectangle(lo, hi):
    return Shape("Rectangle", (Vertex(*lo), Vertex(*hi)))


def _box(lo, hi) -> frozenset[Vertex]:
    return frozenset(
        Vertex(i, j) for i in range(lo[0], hi[0] + 1) for j in range(lo[1], hi[1] + 1)
    )


def shape_of(T: TransferSystem, component_id: int) -> Shape:
    g = T.grid
    part = components(T)
    if not 0 <= component_id < part.count:
        raise InputError(f"component id {component_id} out of range 0..{part.count - 1}")
    members = part.members[component_id]
    r, s = g.r, g.s
    if Vertex(0, 0) in members:
        for l in range(r):
            if members == _box((0, 0), (l, s)):
                return Vl(l)
        for k in range(s):
            if members == _box((0, 0), (r, k)):
                return Hk(k)
        for l in range(r):
            for k in range(s):
                if members == _box((0, 0), (l, s)) | _box((0, 0), (r, k)):
                    return Lshape(l, k)
    lo = part.smallest[component_id]
    hi = Vertex(max(v.i for v in members), max(v.j for v in members))
    if members == _box(lo, hi):
        return Rectangle(lo, hi)
    return Shape("Irregular")


class Reason(str, Enum):
    CONNECTED = "Connected"
    TWO_COMP_H0_V0 = "TwoCompH0orV0"
    TWO_COMP_THICK = "TwoCompThick"
    TWO_COMP_L = "TwoCompL"
    THREE_PLUS = "ThreePlusComponents"
    ORACLE = "OracleOnly"


@dataclass(frozen=True)
class LspVerdict:
    is_lsp: bool
    reason: Reason
    witness: TransferSystem | None = None
    shape: Shape | None = None
    added_edge: tuple[Vertex, Vertex] | None = None

    def describe(self) -> str:
        head = "LSP" if self.is_lsp else "not LSP"
        detail = {
            Reason.CONNECTED: "one component",
            Reason.TWO_COMP_H0_V0: f"two components, {self.shape}",
            Reason.TWO_COMP_THICK: f"two components, {self.shape}",
            Reason.TWO_COMP_L: f"two components, {self.shape}",
            Reason.THREE_PLUS: "three or more components",
            Reason.ORACLE: "exhaustive search",
        }[self.reason]
        return f"{head} ({detail})"


def is_lsp_fast(T: TransferSystem) -> LspVerdict:
    """Classify by component count and the shape of the bottom component."""
    g = T.grid
    part = components(T)
    if part.count == 1:
        return LspVerdict(True, Reason.CONNECTED)
    origin = Vertex(0, 0)
    if part.count >= 3:
        outside = [v for v in g.vertices if not part.same(v, origin)]
        target = min(outside)
        return _not_lsp(T, Reason.THREE_PLUS, target)

    shape = shape_of(T, part.id_of(origin))
    if shape.kind in ("V", "H") and shape.params[0] == 0:
        return LspVerdict(True, Reason.TWO_COMP_H0_V0, shape=shape)
    if shape.kind == "H":
        k = shape.params[0]
        return _not_lsp(T, Reason.TWO_COMP_THICK, Vertex(0, k + 1), shape)
    if shape.kind == "V":
        l = shape.params[0]
        return _not_lsp(T, Reason.TWO_COMP_THICK, Vertex(l + 1, 0), shape)
    if shape.kind == "L":
        l, k = shape.params
        return _not_lsp(T, Reason.TWO_COMP_L, Vertex(l + 1, k + 1), shape)
    raise AssertionError(f"two-component system with bottom component of shape {shape}: {T}")


def _not_lsp(T, reason, target, shape=None) -> LspVerdict:
    edge = (Vertex(0, 0), target)
    witness = min_compatible_extension(T, [edge])
    return LspVerdict(False, reason, witness, shape, edge)


def is_lsp_oracle(T: TransferSystem, max_vertices: int = 12) -> LspVerdict:
    """Decide LSP from the definition by listing every compatible superset."""
    trivial = {hull(T), complete_relation(T.grid)}
    found = compatible_supersets(T, max_vertices)
    extra = [tp for tp in found if tp not in trivial]
    if not extra:
        assert trivial <= set(found)
        return LspVerdict(True, Reason.ORACLE)
    return LspVerdict(False, Reason.ORACLE, extra[0])


# ------------------------------------------------------------------ counting


def catalan(n: int) -> int:
    if n < 0:
        raise InputError("catalan needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def fuss_catalan_A(m: int) -> int:
    """``A_m(3, 1) = C(3m+1, m) / (3m+1)``."""
    if m < 0:
        raise InputError("fuss_catalan_A needs m >= 0")
    q, rem = divmod(comb(3 * m + 1, m), 3 * m + 1)
    assert rem == 0
    return q


def lsp_count_chain(n: int) -> int:
    if n < 1:
        raise InputError("lsp_count_chain needs n >= 1")
    return catalan(n) + catalan(n - 1)


def lsp_proportion_chain(n: int) -> Fraction:
    p = Fraction(lsp_count_chain(n), catalan(n + 1))
    assert p == Fraction(5 * n * n + 9 * n - 2, 16 * n * n - 4)
    return p


def round_half_up(x: Fraction, places: int = 2) -> Decimal:
    d = Decimal(x.numerator) / Decimal(x.denominator)
    return d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def compatible_pair_formulas(n: int) -> dict[str, int | Fraction]:
    """Both readings of the chain compatible-pair formula at ``n``.

    ``shifted`` is ``A_{n+1}(3,1)``, which matches brute force; ``literal``
    evaluates ``C(3n+1, n) / (3n+1)`` as written with index n.
    """
    return {
        "shifted": fuss_catalan_A(n + 1),
        "literal": Fraction(comb(3 * n + 1, n), 3 * n + 1),
    }
