"""Command-line front end.

Exit codes: 0 success or true verdict, 1 false verdict under ``--strict``,
2 input error, 3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import re
import sys
from pathlib import Path

from . import verify as verify_mod
from .classify import (
    compatible_pair_formulas,
    is_lsp_fast,
    is_lsp_oracle,
    lsp_count_chain,
    lsp_proportion_chain,
    round_half_up,
    shape_of,
)
from .compatibility import core_chain, is_compatible, min_compatible_extension
from .dot import export_dot
from .enumeration import (
    DEFAULT_MAX_VERTICES,
    FILTERS,
    count_compatible_pairs,
    count_filtered,
    enumerate_transfer_systems,
    filter_predicate,
)
from .errors import InputError, PreconditionError, ResourceGuardError
from .lattice import Grid, Vertex, chain
from .saturation import hull, is_saturated
from .transfer import TransferSystem, components, transfer_closure, validate
from .tsys_format import document, load, render_tsys, to_json_obj

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
VERIFY_MAX_VERTICES = 9

_EDGE_ARG = re.compile(r"^\s*(\d+)\s*[ ,]\s*(\d+)\s*->\s*(\d+)\s*[ ,]\s*(\d+)\s*$")


def _edge_arg(text: str):
    m = _EDGE_ARG.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected 'i j -> k l', got {text!r}")
    return (Vertex(int(m[1]), int(m[2])), Vertex(int(m[3]), int(m[4])))


def _v(v) -> list[int]:
    return [v.i, v.j]


def _system_obj(T: TransferSystem) -> dict:
    return to_json_obj(document(T))


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, obj: dict) -> None:
        if self.as_json:
            print(json.dumps(obj, sort_keys=True))
        else:
            print(text.rstrip("\n"))


def _load_system(path, swap) -> TransferSystem:
    doc = load(path, swap=swap)
    return TransferSystem.from_edges(doc.grid, doc.edges)


def _verdict(ok: bool, args) -> int:
    return EXIT_OK if ok or not args.strict else EXIT_FALSE


# ------------------------------------------------------------------ commands


def cmd_validate(args, out):
    doc = load(args.file, swap=args.swap_pq)
    result = validate(doc.grid, doc.edges)
    lines = ["valid" if result.ok else "invalid"] + [f"  {v}" for v in result.violations]
    out.emit("\n".join(lines), {
        "valid": result.ok,
        "violations": [
            {
                "axiom": v.axiom,
                "missing": None if v.missing is None else [_v(v.missing.src), _v(v.missing.dst)],
                "witness": [_v(w) for w in v.witness],
            }
            for v in result.violations
        ],
    })
    return _verdict(result.ok, args)


def cmd_close(args, out):
    doc = load(args.file, swap=args.swap_pq)
    T = transfer_closure(doc.grid, doc.edges)
    out.emit(render_tsys(document(T, doc.name)), _system_obj(T))
    return EXIT_OK


def cmd_hull(args, out):
    T = _load_system(args.file, args.swap_pq)
    H = hull(T)
    sat = is_saturated(T)
    text = render_tsys(document(H))
    if not sat.saturated:
        low, mid, high = sat.witness
        text = f"# input not saturated: {low}->{high} without {mid}->{high}\n" + text
    out.emit(text, {"hull": _system_obj(H), "input_saturated": sat.saturated})
    return EXIT_OK


def cmd_components(args, out):
    T = _load_system(args.file, args.swap_pq)
    part = components(T)
    rows, objs = [], []
    for cid in range(part.count):
        members = sorted(part.members[cid])
        shape = shape_of(T, cid)
        rows.append(
            f"{cid}: smallest {part.smallest[cid]} shape {shape} members "
            + " ".join(str(v) for v in members)
        )
        objs.append({
            "id": cid,
            "smallest": _v(part.smallest[cid]),
            "shape": str(shape),
            "members": [_v(v) for v in members],
        })
    out.emit(f"{part.count} component(s)\n" + "\n".join(rows), {"count": part.count, "components": objs})
    return EXIT_OK


def cmd_compat(args, out):
    T = _load_system(args.t, args.swap_pq)
    Tp = _load_system(args.tp, args.swap_pq)
    rep = is_compatible(T, Tp)
    lines = ["compatible" if rep.verdict else "incompatible"]
    lines += [f"  not contained: {e}" for e in rep.not_contained]
    lines += [f"  violation: {v}" for v in rep.violations]
    out.emit("\n".join(lines), {
        "compatible": rep.verdict,
        "not_contained": [[_v(e.src), _v(e.dst)] for e in rep.not_contained],
        "violations": [
            {"A": _v(v.A), "B": _v(v.B), "C": _v(v.C), "BmeetC": _v(v.BmeetC)} for v in rep.violations
        ],
    })
    return _verdict(rep.verdict, args)


def cmd_extend(args, out):
    T = _load_system(args.file, args.swap_pq)
    edges = list(args.edge or [])
    if args.edges_file:
        edges += list(load(args.edges_file, swap=args.swap_pq).edges)
    W = min_compatible_extension(T, edges)
    out.emit(render_tsys(document(W)), _system_obj(W))
    return EXIT_OK


def cmd_lsp(args, out):
    T = _load_system(args.file, args.swap_pq)
    fast = is_lsp_fast(T)
    text = fast.describe()
    obj = {"lsp": fast.is_lsp, "reason": fast.reason.value, "shape": str(fast.shape) if fast.shape else None}
    if fast.witness is not None:
        obj["added_edge"] = [_v(fast.added_edge[0]), _v(fast.added_edge[1])]
        obj["witness"] = _system_obj(fast.witness)
    ok = fast.is_lsp
    if args.oracle:
        oracle = is_lsp_oracle(T, args.max_vertices)
        agree = oracle.is_lsp == fast.is_lsp
        text += "; oracle agrees" if agree else f"; ORACLE DISAGREES ({oracle.describe()})"
        obj["oracle"] = {"lsp": oracle.is_lsp, "agrees": agree}
        if not agree:
            ok = False
    if fast.witness is not None and not args.quiet:
        u, v = fast.added_edge
        text += f"\nwitness: least compatible extension adding {u}->{v}\n" + render_tsys(document(fast.witness))
    out.emit(text, obj)
    if args.oracle and not obj["oracle"]["agrees"]:
        return EXIT_FALSE
    return _verdict(ok, args)


def cmd_core(args, out):
    T = _load_system(args.file, args.swap_pq)
    C = core_chain(T)
    out.emit(render_tsys(document(C)), _system_obj(C))
    return EXIT_OK


def cmd_enumerate(args, out):
    g = Grid(args.r, args.s)
    systems = enumerate_transfer_systems(g, args.max_vertices)
    if args.filter:
        pred = filter_predicate(args.filter)
        systems = [t for t in systems if pred(t)]
    if args.count_only:
        out.emit(str(len(systems)), {"r": g.r, "s": g.s, "filter": args.filter, "count": len(systems)})
        return EXIT_OK
    text = "\n".join(render_tsys(document(t, f"#{k}")) for k, t in enumerate(systems))
    out.emit(text, {"r": g.r, "s": g.s, "systems": [_system_obj(t)["edges"] for t in systems]})
    return EXIT_OK


def cmd_count_pairs(args, out):
    g = Grid(args.r, args.s)
    n = count_compatible_pairs(g, args.max_vertices)
    obj = {"r": g.r, "s": g.s, "count": n}
    lines = [str(n)]
    if g.is_chain:
        length = g.n_vertices - 1
        forms = compatible_pair_formulas(length)
        obj["fuss_catalan_shifted"] = forms["shifted"]
        obj["fuss_catalan_literal"] = str(forms["literal"])
        obj["literal_matches"] = forms["literal"] == n
        lines.append(f"A_{length + 1}(3,1) = C({3 * length + 4},{length + 1})/{3 * length + 4} = {forms['shifted']}")
        lines.append(
            f"C(3n+1,n)/(3n+1) at n={length}: {forms['literal']}"
            + ("" if forms["literal"] == n else "  MISMATCH: the explicit expression is off by one in n")
        )
    out.emit("\n".join(lines), obj)
    return EXIT_OK


def cmd_export_dot(args, out):
    T = _load_system(args.file, args.swap_pq)
    text = export_dot(T, color_components=args.color_components, name=Path(args.file).stem)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    grids = verify_mod.default_grids(args.max_vertices)
    results = verify_mod.run(grids, sample_limit=args.sample_limit, budget_seconds=args.budget)
    ok = all(r.ok for r in results)
    lines = [r.line() for r in results]
    for r in results:
        lines += [f"    {f}" for f in r.failures]
    lines.append("all checks passed" if ok else "FAILURES")
    out.emit("\n".join(lines), {
        "ok": ok,
        "results": [
            {"suite": r.suite, "grid": [r.grid.r, r.grid.s], "checked": r.checked,
             "sampled": r.sampled, "failures": r.failures}
            for r in results
        ],
    })
    return EXIT_OK if ok else EXIT_FALSE


def cmd_report(args, out):
    from .plotting import plot_lsp_proportion, save_transfer_system

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    counted = {}
    for n in range(1, args.n_max + 1):
        g = chain(n)
        total = len(enumerate_transfer_systems(g))
        lsp = count_filtered(g, "lsp")
        p = lsp_proportion_chain(n)
        counted[n] = lsp / total
        pairs = count_compatible_pairs(g) if n <= args.pairs_max else ""
        rows.append({
            "n": n,
            "total": total,
            "lsp": lsp,
            "lsp_formula": lsp_count_chain(n),
            "proportion": f"{p.numerator}/{p.denominator}",
            "rounded": str(round_half_up(p)),
            "compatible_pairs": pairs,
        })
    table = outdir / "chain_lsp.csv"
    with table.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    fig = outdir / "lsp_proportion.png"
    plot_lsp_proportion(range(1, max(args.n_max, 2) + 1), fig, counted)
    written = [str(table), str(fig)]
    for path in args.files:
        T = _load_system(path, args.swap_pq)
        stem = Path(path).stem
        target = outdir / f"{stem}.png"
        save_transfer_system(T, target, title=stem)
        written.append(str(target))
        verdict = is_lsp_fast(T)
        if verdict.witness is not None:
            H = hull(T)
            extra = [e for e in verdict.witness.edges() if e not in H]
            target = outdir / f"{stem}_witness.png"
            save_transfer_system(verdict.witness, target, title=f"{stem}: witness", highlight=extra)
            written.append(str(target))
    out.emit("\n".join(written), {"written": written})
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="exit 1 on a false verdict")
    common.add_argument("--swap-pq", action="store_true", help="exchange the two primes in input files")
    common.add_argument("--max-vertices", type=int, default=None,
                        help=f"enumeration guard (default {DEFAULT_MAX_VERTICES}; 9 for verify)")

    p = argparse.ArgumentParser(prog="cpqtransfer", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the transfer-system axioms").add_argument("file")
    add("close", cmd_close, "least transfer system containing the edges").add_argument("file")
    add("hull", cmd_hull, "saturated hull").add_argument("file")
    add("components", cmd_components, "connected components and shapes").add_argument("file")

    sp = add("compat", cmd_compat, "is (T, T') a compatible pair")
    sp.add_argument("t")
    sp.add_argument("tp")

    sp = add("extend", cmd_extend, "least compatible extension of T containing extra edges")
    sp.add_argument("file")
    sp.add_argument("--edge", action="append", type=_edge_arg, help="edge 'i j -> k l' (repeatable)")
    sp.add_argument("--edges-file", help=".tsys file whose edges are added")

    sp = add("lsp", cmd_lsp, "lesser-simply-paired classification")
    sp.add_argument("file")
    sp.add_argument("--oracle", action="store_true", help="confirm by exhaustive search")
    sp.add_argument("--quiet", action="store_true", help="omit the witness listing")

    add("core", cmd_core, "core of a chain transfer system").add_argument("file")

    sp = add("enumerate", cmd_enumerate, "list or count transfer systems on a grid")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--filter", choices=FILTERS)

    sp = add("count-pairs", cmd_count_pairs, "count compatible pairs by exhaustive search")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)

    sp = add("export-dot", cmd_export_dot, "Graphviz DOT with grid positions")
    sp.add_argument("file")
    sp.add_argument("--color-components", action="store_true")
    sp.add_argument("-o", "--output")

    sp = add("verify", cmd_verify, "run the exhaustive theorem suite")
    sp.add_argument("--sample-limit", type=int, default=10_000)
    sp.add_argument("--budget", type=float, default=600.0, help="seconds before later grids are sampled")

    sp = add("report", cmd_report, "chain LSP table as CSV plus matplotlib figures")
    sp.add_argument("files", nargs="*", help=".tsys files to draw (with witnesses)")
    sp.add_argument("--out", default="report")
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--pairs-max", type=int, default=4, help="largest chain for brute-force pair counts")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_vertices is None:
        # shared parent actions cannot carry per-subcommand defaults
        args.max_vertices = VERIFY_MAX_VERTICES if args.command == "verify" else DEFAULT_MAX_VERTICES
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args, Output(args.json))
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
