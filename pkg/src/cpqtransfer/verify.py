"""Exhaustive theorem harness over every transfer system on small grids."""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field

from .classify import is_lsp_fast, is_lsp_oracle, shape_of
from .compatibility import compatible, core_chain, is_compatible
from .enumeration import enumerate_transfer_systems
from .lattice import Grid, Vertex, chain, complete_relation, leq
from .saturation import hull, hull_fixpoint, is_connected, is_saturated
from .transfer import (
    TransferSystem,
    _bits,
    components,
    validate,
    zigzag_path,
)

log = logging.getLogger(__name__)

SUITES = ("enumeration", "lsp", "hull", "compatibility", "structure", "chain")


def default_grids(max_vertices: int = 9) -> list[Grid]:
    grids = [Grid(1, 1), Grid(2, 1), Grid(1, 2), Grid(2, 2)] + [chain(n) for n in range(5)]
    return [g for g in grids if g.n_vertices <= max_vertices]


@dataclass
class CheckResult:
    suite: str
    grid: Grid
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    sampled: bool = False
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, T: TransferSystem, what: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(f"{what}: {T}")

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        note = " (sampled)" if self.sampled else ""
        return (
            f"{status} {self.suite:<14} {str(self.grid):<10} "
            f"{self.checked:>8} checks{note} {self.seconds:6.2f}s"
        )


def _check_enumeration(g, systems, res):
    masks = [T.mask for T in systems]
    if len(set(masks)) != len(masks):
        res.fail(systems[0], "duplicate systems in enumeration")
    if masks != sorted(masks):
        res.fail(systems[0], "enumeration not in canonical order")
    for T in systems:
        res.checked += 1
        if not validate(g, T.edges()).ok:
            res.fail(T, "enumerated system fails validation")


def _check_lsp(g, systems, res):
    top = complete_relation(g)
    for T in systems:
        res.checked += 1
        fast = is_lsp_fast(T)
        oracle = is_lsp_oracle(T)
        if fast.is_lsp != oracle.is_lsp:
            res.fail(T, f"fast says {fast.is_lsp}, oracle says {oracle.is_lsp}")
        for v in (fast, oracle):
            if v.is_lsp:
                if v.witness is not None:
                    res.fail(T, "LSP verdict carries a witness")
                continue
            W = v.witness
            H = hull(T)
            if not (compatible(T, W) and H < W and W < top):
                res.fail(T, f"bad witness {W}")


def _check_hull(g, systems, res):
    top = complete_relation(g)
    for T in systems:
        res.checked += 1
        H = hull(T)
        if H != hull_fixpoint(T):
            res.fail(T, "hull differs from fixpoint hull")
        if hull(H) != H or not is_saturated(H).saturated or not T <= H:
            res.fail(T, "hull not idempotent, saturated and extensive")
        if components(T).as_sets() != components(H).as_sets():
            res.fail(T, "hull changed the components")
        if is_saturated(T).saturated != (H == T):
            res.fail(T, "saturated iff hull(T) = T fails")
        if is_connected(T) != (H == top):
            res.fail(T, "connected iff hull complete fails")


def _check_compatibility(g, systems, res):
    masks = {T: T.mask for T in systems}
    sats = {T for T in systems if is_saturated(T).saturated}
    top = complete_relation(g)
    for T in systems:
        H = hull(T)
        if not (compatible(T, H) and compatible(T, top)):
            res.fail(T, "trivial pairs not compatible")
        m = masks[T]
        for Tp in systems:
            if m & ~masks[Tp]:
                continue
            res.checked += 1
            ok = compatible(T, Tp)
            if ok and not H <= Tp:
                res.fail(T, f"compatible with {Tp} which misses the hull")
            if Tp in sats and not ok:
                res.fail(T, f"saturated superset {Tp} not compatible")
            if H <= Tp and not ok:
                for viol in is_compatible(T, Tp).violations:
                    if leq(viol.B, viol.C) or leq(viol.C, viol.B):
                        res.fail(T, f"violation with comparable B, C against {Tp}")


def _check_structure(g, systems, res):
    top = Vertex(g.r, g.s)
    for T in systems:
        res.checked += 1
        part = components(T)
        vs = g.vertices
        for cid, mask in enumerate(part.masks):
            low = part.smallest[cid]
            members = [vs[b] for b in _bits(mask)]
            for x in members:
                if not leq(low, x):
                    res.fail(T, f"smallest {low} not below {x}")
                if not T.has(low, x):
                    res.fail(T, f"no edge from smallest {low} to {x}")
            for a in members:
                for b in members:
                    path = zigzag_path(T, a, b)
                    if path is None or (a != b and len(path) != 3):
                        res.fail(T, f"no zigzag between {a} and {b}")
        if shape_of(T, part.id_of(top)).kind != "Rectangle":
            res.fail(T, "component of the top vertex is not a rectangle")
        if part.count == 2 and shape_of(T, 0).kind not in ("V", "H", "L"):
            res.fail(T, "two-component bottom shape outside V/H/L")


def _check_chain(g, systems, res):
    if not g.is_chain:
        return
    cores = {T: core_chain(T) for T in systems}
    for T in systems:
        H = hull(T)
        for Tp in systems:
            res.checked += 1
            law = T <= Tp and H <= cores[Tp]
            if law != compatible(T, Tp):
                res.fail(T, f"chain law fails against {Tp}")


_RUNNERS = {
    "enumeration": _check_enumeration,
    "lsp": _check_lsp,
    "hull": _check_hull,
    "compatibility": _check_compatibility,
    "structure": _check_structure,
    "chain": _check_chain,
}


def run(
    grids: list[Grid] | None = None,
    suites=SUITES,
    sample_limit: int = 10_000,
    budget_seconds: float = 600.0,
    seed: int = 0,
) -> list[CheckResult]:
    """Run the requested suites on every transfer system of every grid.

    A grid whose enumeration exceeds ``sample_limit`` systems is checked on
    a seeded random sample of that size instead, with a logged notice.
    """
    grids = default_grids() if grids is None else grids
    results = []
    started = time.perf_counter()
    for g in grids:
        systems = enumerate_transfer_systems(g)
        sampled = False
        if len(systems) > sample_limit or time.perf_counter() - started > budget_seconds:
            log.warning("%s: checking a random sample of %d of %d systems", g, sample_limit, len(systems))
            systems = random.Random(seed).sample(systems, min(sample_limit, len(systems)))
            sampled = True
        for suite in suites:
            if suite == "chain" and not g.is_chain:
                continue
            res = CheckResult(suite, g, sampled=sampled)
            t0 = time.perf_counter()
            _RUNNERS[suite](g, systems, res)
            res.seconds = time.perf_counter() - t0
            log.info(res.line())
            results.append(res)
    return results
