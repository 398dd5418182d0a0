"""Command-line front end.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or input error,
3 a search hit its budget before finishing.

Graph arguments accept either a ``.hg`` file or a short name such as
``K3``, ``P3`` (path on 3 vertices), ``S3`` (K_{1,3}), ``M2``, ``C5``,
``B2`` (two triangles sharing a vertex) or ``K2,3``.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import chromatic, constructions, operators
from .errors import HypergraphError
from .expansion import contains_expansion, expand
from .hypergraph import UniformHypergraph, empty_hypergraph, named_graph, read_hg
from .search import (
    GAP_COLUMNS,
    Forbidden,
    SearchProblem,
    ex_graph_cliques,
    ex_graph_edges,
    ex_hypergraph,
    gap_table,
    lower_bound_local_search,
    _budget,
)
from .structure import analyze_structure
from .verify import DEFAULT_SEED, SUITES, verify_suite

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("hyperturan")


class UsageError(Exception):
    pass


def load_graphlike(arg: str, expect_r: int | None = None) -> UniformHypergraph:
    path = Path(arg)
    if path.exists():
        h = read_hg(path)
    else:
        try:
            h = named_graph(arg)
        except HypergraphError:
            raise UsageError(f"{arg!r} is neither a readable file nor a known graph name") from None
    if expect_r is not None and h.r != expect_r:
        raise UsageError(f"{arg}: expected uniformity {expect_r}, found {h.r}")
    return h


# output -------------------------------------------------------------------------

def hypergraph_json(h: UniformHypergraph) -> dict:
    return {"n": h.n, "r": h.r, "edges": [list(e) for e in h.edges]}


def emit_hypergraph(h: UniformHypergraph, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(hypergraph_json(h)) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"v{i}" for i in range(h.r)])
        w.writerows(h.edges)
    else:
        out.write(h.to_hg())


def emit_record(record: dict, fmt: str, out, text: str | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif fmt == "csv":
        flat = {k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in record.items()}
        w = csv.DictWriter(out, fieldnames=list(flat), lineterminator="\n")
        w.writeheader()
        w.writerow(flat)
    else:
        out.write((text if text is not None else "\n".join(f"{k}: {v}" for k, v in record.items())) + "\n")


# commands -----------------------------------------------------------------------

def cmd_expand(a, out) -> int:
    core = load_graphlike(a.core, 2)
    emit_hypergraph(expand(core, a.r), a.format or "hg", out)
    return EXIT_OK


def cmd_contains(a, out) -> int:
    host = load_graphlike(a.host)
    core = load_graphlike(a.core, 2)
    if host.r != a.r:
        raise UsageError(f"host uniformity {host.r} differs from --r {a.r}")
    w = contains_expansion(host, core, a.r)
    fmt = a.format or "text"
    rec = {"contained": w is not None, "witness": w.to_json() if w else None}
    emit_record(rec, fmt, out, "contained" if w else "not contained")
    return EXIT_OK


def cmd_shadow(a, out) -> int:
    emit_hypergraph(operators.shadow(load_graphlike(a.host)), a.format or "hg", out)
    return EXIT_OK


def cmd_heavy(a, out) -> int:
    h = load_graphlike(a.host)
    g = operators.iterated_heavy(h, a.t, a.target) if a.target is not None else operators.heavy_shadow(h, a.t)
    emit_hypergraph(g, a.format or "hg", out)
    return EXIT_OK


def cmd_fatgraph(a, out) -> int:
    emit_hypergraph(operators.fat_pair_graph(load_graphlike(a.host), a.t), a.format or "hg", out)
    return EXIT_OK


def cmd_chromatic(a, out) -> int:
    val = chromatic.chromatic_number(load_graphlike(a.graph, 2))
    emit_record({"chromatic_number": val}, a.format or "text", out, str(val))
    return EXIT_OK


def cmd_critical(a, out) -> int:
    edges = chromatic.color_critical_edges(load_graphlike(a.graph, 2))
    emit_record({"critical_edges": [list(e) for e in edges]}, a.format or "text", out,
                "\n".join(f"{x} {y}" for x, y in edges) if edges else "(none)")
    return EXIT_OK


def cmd_decomp(a, out) -> int:
    fam = chromatic.decomposition_family(load_graphlike(a.graph, 2), minimal=not a.full)
    rec = {"minimal": fam.minimal, "members": [hypergraph_json(m) for m in fam]}
    text = "\n".join(m.to_hg().strip().replace("\n", "; ") for m in fam)
    emit_record(rec, a.format or "text", out, text)
    return EXIT_OK


def cmd_biex(a, out) -> int:
    val = chromatic.biex(a.n, load_graphlike(a.graph, 2), minimal=not a.full,
                         budget_nodes=a.budget_nodes, budget_secs=a.budget_secs)
    emit_record({"n": a.n, "biex": val}, a.format or "text", out, str(val))
    return EXIT_OK


def cmd_construct(a, out) -> int:
    kind = a.kind
    need = {
        "turan": ("n", "k", "r"),
        "turan-cone": ("n", "k", "r", "i"),
        "hpart": ("n", "k", "r", "m"),
        "hprime": ("n", "k", "r", "m"),
        "book": ("k",),
        "fixed-vertex": ("n", "r"),
    }[kind]
    missing = [p for p in need if getattr(a, p) is None]
    if missing:
        raise UsageError(f"construct {kind} needs --{' --'.join(missing)}")
    if kind == "turan":
        h = constructions.turan_graph(a.n, a.k) if a.r == 2 else constructions.turan_hypergraph(a.n, a.k, a.r)
    elif kind == "turan-cone":
        h = constructions.turan_cone(a.n, a.k, a.r, a.i)
    elif kind == "hpart":
        h = constructions.h_part(a.n, a.k, a.r, a.m)
    elif kind == "hprime":
        h = constructions.h_prime(a.n, a.k, a.r, a.m)
    elif kind == "book":
        h = constructions.book_graph(a.k)
    else:
        h = constructions.fixed_vertex_hypergraph(a.n, a.r)
    fmt = a.format or "hg"
    if fmt in ("json", "text") and a.count_only:
        params = {p: getattr(a, p) for p in need}
        emit_record({"construction": kind, "params": params, "edges": len(h.edges)}, fmt, out, str(len(h.edges)))
    else:
        emit_hypergraph(h, fmt, out)
    return EXIT_OK


def cmd_optimal_m(a, out) -> int:
    m, edges = constructions.optimal_m(a.n, a.k, a.r)
    rec = {"n": a.n, "k": a.k, "r": a.r, "m": m, "edges": edges,
           "argmax": constructions.optimal_m_set(a.n, a.k, a.r)}
    emit_record(rec, a.format or "text", out, f"m={m} edges={edges}")
    return EXIT_OK


def _emit_search(res, a, out) -> int:
    fmt = a.format or "json"
    if fmt == "hg":
        emit_hypergraph(res.witness, "hg", out)
    else:
        rec = res.to_json()
        emit_record(rec, fmt, out, f"value={res.value} exhaustive={res.exhaustive} nodes={res.nodes}")
    return EXIT_OK if res.exhaustive or a.what == "local" else EXIT_BUDGET


def cmd_search(a, out) -> int:
    b = dict(budget_nodes=a.budget_nodes, budget_secs=a.budget_secs, workers=a.jobs)
    if a.what == "ex-graph":
        fam = [load_graphlike(s, 2) for s in a.forbid]
        res = ex_graph_edges(a.n, fam, **b)
    elif a.what == "ex-cliques":
        fam = [load_graphlike(s, 2) for s in a.forbid]
        res = ex_graph_cliques(a.n, a.order, fam, **b)
    elif a.what == "ex-hyper":
        res = ex_hypergraph(a.n, a.r, load_graphlike(a.core, 2), method=a.method, **b)
    else:
        core = load_graphlike(a.core, 2)
        problem = SearchProblem(a.n, a.r, (Forbidden("expansion", core),), None, _budget(a.budget_nodes, a.budget_secs))
        seed = load_graphlike(a.start) if a.start else empty_hypergraph(a.n, a.r)
        res = lower_bound_local_search(problem, seed, a.restarts, a.steps, a.seed)
    return _emit_search(res, a, out)


def cmd_gap_table(a, out) -> int:
    core = load_graphlike(a.core, 2)
    rows = gap_table(core, a.r, range(a.n_min, a.n_max + 1), a.budget_nodes, a.budget_secs,
                     rng_seed=a.seed, workers=a.jobs)
    fmt = a.format or "csv"
    if fmt == "json":
        out.write(json.dumps(rows, sort_keys=True) + "\n")
    else:
        cols = GAP_COLUMNS[:-2] + [c for c in rows[0] if c.startswith("cliques_p")] + GAP_COLUMNS[-2:] if rows else GAP_COLUMNS
        w = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: "" if row.get(c) is None else row.get(c) for c in cols})
    return EXIT_OK if all(r["exhaustive"] for r in rows) else EXIT_BUDGET


def cmd_analyze(a, out) -> int:
    rep = analyze_structure(load_graphlike(a.host), a.k, a.t, a.theta, rng_seed=a.seed)
    text = (f"partition: {rep['partition']}\ninternal fat pairs: {rep['internal_edges']}\n"
            f"B-candidates: {rep['b_candidates']}")
    emit_record(rep, a.format or "text", out, text)
    return EXIT_OK


def cmd_verify(a, out) -> int:
    ids = list(SUITES) if a.suite == "all" else [a.suite]
    if any(i not in SUITES for i in ids):
        raise UsageError(f"unknown suite {a.suite!r}; choose from {', '.join(SUITES)} or all")
    ok = True
    reports = []
    for sid in ids:
        rep = verify_suite(sid, workers=a.jobs, seed=a.seed)
        ok &= rep.passed
        reports.append(rep.to_json())
    fmt = a.format or "json"
    if fmt == "text":
        for r in reports:
            out.write(f"{r['suite']}: {'PASS' if r['pass'] else 'FAIL'}\n")
            for c in r["claims"]:
                out.write(f"  [{c['status']}] {c['id']}: {c['detail']}\n")
    else:
        body = reports[0] if len(reports) == 1 else reports
        out.write(json.dumps(body, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_CLAIM


# parser -------------------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "csv", "hg", "text"], default=d)
    p.add_argument("--budget-nodes", type=int, default=d)
    p.add_argument("--budget-secs", type=float, default=d)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS if suppress else DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS if suppress else 1,
                   help="worker processes for searches")
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS if suppress else False)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(prog="hyperturan", parents=[_common(suppress=False)],
                                     description="Turán problems for graph expansions")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    p = add("expand", cmd_expand, help="print F^(r)+")
    p.add_argument("--core", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("contains", cmd_contains, help="does the host contain F^(r)+?")
    p.add_argument("--host", required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("shadow", cmd_shadow)
    p.add_argument("--host", required=True)

    p = add("heavy", cmd_heavy, help="t-heavy shadow (iterated down to --target)")
    p.add_argument("--host", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--target", type=int)

    p = add("fatgraph", cmd_fatgraph, help="graph of t-fat pairs")
    p.add_argument("--host", required=True)
    p.add_argument("--t", type=int, required=True)

    for name, func in (("chromatic", cmd_chromatic), ("critical", cmd_critical)):
        p = add(name, func)
        p.add_argument("--graph", required=True)

    p = add("decomp", cmd_decomp, help="decomposition family")
    p.add_argument("--graph", required=True)
    p.add_argument("--full", action="store_true", help="skip the subgraph-minimal reduction")

    p = add("biex", cmd_biex)
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full", action="store_true")

    p = add("construct", cmd_construct)
    p.add_argument("kind", choices=["turan", "turan-cone", "hpart", "hprime", "book", "fixed-vertex"])
    for flag in ("n", "k", "r", "i", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--count-only", action="store_true", help="emit {construction, params, edges}")

    p = add("optimal-m", cmd_optimal_m)
    for flag in ("n", "k", "r"):
        p.add_argument(f"--{flag}", type=int, required=True)

    p = add("search", cmd_search, help="exact extremal searches and local search")
    p.add_argument("what", choices=["ex-graph", "ex-cliques", "ex-hyper", "local"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--order", type=int, default=3, help="clique order for ex-cliques")
    p.add_argument("--forbid", nargs="+", default=[])
    p.add_argument("--core")
    p.add_argument("--method", choices=["orderly", "branch"], default="orderly")
    p.add_argument("--start", help="seed hypergraph file for local search")
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--steps", type=int, default=1000)

    p = add("gap-table", cmd_gap_table)
    p.add_argument("--core", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add("analyze-structure", cmd_analyze)
    p.add_argument("--host", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--theta", type=float, default=0.25)

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if a.command == "search":
        if a.what in ("ex-hyper", "local") and not a.core:
            print("error: --core is required", file=sys.stderr)
            return EXIT_USAGE
        if a.what in ("ex-graph", "ex-cliques") and not a.forbid:
            print("error: --forbid is required", file=sys.stderr)
            return EXIT_USAGE
    try:
        return a.func(a, out)
    except (UsageError, HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
