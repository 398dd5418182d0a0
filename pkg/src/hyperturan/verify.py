"""Verification suites: each claim is a finite, deterministic check.

Reports serialise to ``{suite, claims: [{id, anchor, status, detail}], pass}``
and contain no timing data, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .canon import contains_subhypergraph, is_isomorphic
from .chromatic import chromatic_number, color_critical_edges, decomposition_family, biex
from .constructions import (
    book_graph,
    fixed_vertex_hypergraph,
    h_prime,
    h_prime_count,
    optimal_m,
    optimal_m_set,
    turan_cone,
    turan_cone_count,
    turan_count,
    turan_graph,
    turan_hypergraph,
)
from .expansion import contains_expansion, default_t, expand, is_expansion_free
from .hypergraph import (
    UniformHypergraph,
    complete_graph,
    empty_hypergraph,
    make_graph,
    matching_graph,
    path_graph,
    star_graph,
)
from .operators import clique_expansion, count_cliques, fat_pair_graph, heavy_shadow
from .search import (
    Forbidden,
    SearchProblem,
    ex_graph_cliques,
    ex_graph_edges,
    ex_hypergraph,
    free_classes,
    gap_table,
)

DEFAULT_SEED = 20240611


@dataclass
class Claim:
    id: str
    anchor: str
    status: str
    detail: str

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "detail": self.detail}


@dataclass
class VerifySuiteReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def add(self, cid: str, anchor: str, ok: bool | None, detail: str) -> None:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        self.claims.append(Claim(cid, anchor, status, detail))

    def to_json(self) -> dict:
        return {"suite": self.suite, "claims": [c.to_json() for c in self.claims], "pass": self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


SHADOW_CORES = {"K3": complete_graph(3), "P3": path_graph(3), "S3": star_graph(3)}


@lru_cache(maxsize=None)
def _free_3graphs(name: str, n: int, workers: int = 1) -> tuple[tuple[UniformHypergraph, ...], bool]:
    problem = SearchProblem(n, 3, (Forbidden("expansion", SHADOW_CORES[name]),))
    reps, exhaustive = free_classes(problem, workers)
    return tuple(reps), exhaustive


def _random_maximal_free(n: int, r: int, f, rng: random.Random) -> UniformHypergraph:
    slots = list(combinations(range(n), r))
    rng.shuffle(slots)
    h = empty_hypergraph(n, r)
    for s in slots:
        cand = h.with_edges([s])
        if is_expansion_free(cand, f, r):
            h = cand
    return h


def _shadow_family_suite(suite: str, operator, anchor: str, workers: int, seed: int) -> VerifySuiteReport:
    rep = VerifySuiteReport(suite)
    for name, f in SHADOW_CORES.items():
        t = default_t(f, 3)
        checked, bad, nonempty = 0, [], 0
        complete = True
        for n in range(1, 7):
            reps, exhaustive = _free_3graphs(name, n, workers)
            complete &= exhaustive
            for h in reps:
                checked += 1
                g = operator(h, t)
                nonempty += bool(g.edges)
                if not is_expansion_free(g, f, 2):
                    bad.append([list(e) for e in h.edges])
        rep.add(
            f"{suite}-{name}-exhaustive",
            anchor,
            complete and not bad,
            f"F={name}, r=3, t={t}: {checked} iso classes of F+-free 3-graphs on n<=6, "
            f"{nonempty} with non-empty output, {len(bad)} counterexamples"
            + ("" if complete else " (enumeration incomplete)"),
        )
    rng = random.Random(seed)
    for name, f in SHADOW_CORES.items():
        t = default_t(f, 3)
        checked, bad, nonempty = 0, 0, 0
        for n in (8, 9):
            for _ in range(8):
                h = _random_maximal_free(n, 3, f, rng)
                g = operator(h, t)
                checked += 1
                nonempty += bool(g.edges)
                bad += not is_expansion_free(g, f, 2)
        rep.add(
            f"{suite}-{name}-random",
            anchor + " (random maximal hosts beyond the exhaustive range)",
            bad == 0,
            f"F={name}, r=3, t={t}: {checked} random maximal F+-free 3-graphs on n in {{8,9}}, "
            f"{nonempty} with non-empty output, {bad} counterexamples",
        )
    return rep


def suite_heavy_shadow(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    return _shadow_family_suite(
        "arny", heavy_shadow, "t-heavy shadow of an F+-free r-graph is F^(r-1)+-free", workers, seed
    )


def suite_fat_graph(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    return _shadow_family_suite(
        "fat-corollary", fat_pair_graph, "graph of t-fat pairs of an F+-free r-graph is F-free", workers, seed
    )


def suite_biex_book(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("biex-book")
    anchor = "biex(n, B_{k+1,1}) = 1"
    for k, ns in ((2, range(4, 9)), (3, range(4, 8))):
        book = book_graph(k)
        for minimal in (True, False):
            vals = {n: biex(n, book, minimal, workers=workers) for n in ns}
            rep.add(
                f"biex-B{k + 1}1-{'minimal' if minimal else 'full'}",
                anchor,
                all(v == 1 for v in vals.values()),
                f"k={k}, family {'reduced' if minimal else 'unreduced'}: " + ", ".join(f"n={n}: {v}" for n, v in vals.items()),
            )
    return rep


def suite_decomp_book(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("decomp-book")
    anchor = "D(B_{k+1,1}) contains the 2-edge matching and the 2-edge star"
    for k in (2, 3, 4):
        fam = decomposition_family(book_graph(k), minimal=False)
        has_matching = any(is_isomorphic(m, matching_graph(2)) for m in fam)
        has_star = any(is_isomorphic(m, star_graph(2)) for m in fam)
        rep.add(
            f"decomp-B{k + 1}1",
            anchor,
            has_matching and has_star,
            f"k={k}: {len(fam)} members up to isomorphism; matching={has_matching}, star={has_star}",
        )
    return rep


def suite_optimal_m_r3(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("optimal-m-r3")
    misses = []
    for k in (3, 4, 5):
        for n in range(k + 2, 31):
            m = (n - 1) // (k - 1)
            arg = optimal_m_set(n, k, 3)
            if m not in arg:
                misses.append(f"(k={k},n={n}): formula {m}, argmax {arg}")
    rep.add(
        "formula-in-argmax",
        "for r = 3 the best first-part order is floor((n-1)/(k-1))",
        not misses,
        f"{len(misses)} of 72 cases outside the argmax" + (": " + "; ".join(misses) if misses else ""),
    )
    alt = []
    for k in (3, 4, 5):
        for n in range(k + 2, 31):
            if max(2, n // k) not in optimal_m_set(n, k, 3):
                alt.append(f"(k={k},n={n})")
    rep.add(
        "enumerated-argmax-max2-n-div-k",
        "enumerated optimum of |E(H'(m))| for r = 3 (reference)",
        not alt,
        f"max(2, floor(n/k)) lies in the argmax for {72 - len(alt)} of 72 cases",
    )
    bad = [
        (n, k, m)
        for k in (3, 4)
        for n in range(k + 1, 13)
        for m in range(2, n - k + 2)
        if h_prime_count(n, k, 3, m) != len(h_prime(n, k, 3, m).edges)
    ]
    rep.add("hprime-count-closed-form", "|E(H'(m))| closed form", not bad, f"{len(bad)} mismatches against enumeration")
    return rep


def suite_counts(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("counts")
    bad_t, bad_c, cases = [], [], 0
    for r in range(2, 5):
        for k in range(r, 6):
            for n in range(0, 16):
                cases += 1
                if turan_count(n, k, r) != len(turan_hypergraph(n, k, r).edges):
                    bad_t.append((n, k, r))
                for i in range(0, min(n, 3) + 1):
                    if turan_cone_count(n, k, r, i) != len(turan_cone(n, k, r, i).edges):
                        bad_c.append((n, k, r, i))
    rep.add("turan-count", "t_r(n,k) is the number of transversal r-sets", not bad_t, f"{cases} cases, mismatches {bad_t}")
    rep.add(
        "turan-cone-count",
        "|E(T_r(n,k,i))| = sum_j C(n-j, r-1) + t_r(n-i,k)",
        not bad_c,
        f"i<=3, mismatches {bad_c}",
    )
    got = len(h_prime(7, 3, 3, 3).edges)
    rep.add("hprime-7-3-3-3", "|E(H'(3))| for n=7, k=3, r=3", got == 19, f"{got} edges (expected 19)")
    return rep


def suite_lower_bounds(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("lower-bounds")
    k3 = complete_graph(3)
    for n in range(4, 7):
        ex = ex_hypergraph(n, 3, k3, workers=workers)
        cl = ex_graph_cliques(n, 3, [k3], workers=workers)
        lb_clique = len(clique_expansion(cl.witness, 3).edges)
        lb_fixed = comb(n - 1, 2)
        ok = ex.exhaustive and cl.exhaustive and ex.value >= lb_clique and ex.value >= lb_fixed
        rep.add(
            f"sandwich-K3-n{n}",
            "ex_r(n,F+) >= ex(n,K_r,F) and >= C(n-1,r-1) for non-star F",
            ok,
            f"value={ex.value} (exhaustive={ex.exhaustive}), clique LB={lb_clique}, fixed-vertex LB={lb_fixed}",
        )
    rows = gap_table(k3, 3, range(4, 7), workers=workers)
    bad = [
        row["n"] for row in rows
        if row["exhaustive"] and any(
            row[c] is not None and row[c] > row["value"] for c in ("lb_clique", "lb_fixed", "lb_turan_cone", "lb_hprime")
        )
    ]
    rep.add("gap-table-rows", "every lower-bound cell is at most the exhaustive value", not bad, f"violations at n={bad}")
    host = clique_expansion(turan_graph(9, 3), 3)
    rep.add(
        "clique-expansion-free",
        "the r-cliques of an F-free graph form an F+-free r-graph",
        is_expansion_free(host, complete_graph(4), 3),
        f"T_2(9,3) triangles: {len(host.edges)} hyperedges, K_4 expansion absent",
    )
    viol, checked = [], 0
    for core in _graphs_without_isolated(5):
        if _is_star(core):
            continue
        for n in range(3, 9):
            checked += 1
            if not is_expansion_free(fixed_vertex_hypergraph(n, 3), core, 3):
                viol.append((core.edges, n))
    rep.add(
        "fixed-vertex-free",
        "all r-sets through one vertex avoid F+ when F is not a star",
        not viol,
        f"{checked} (F, n) pairs, F non-star on <=5 vertices, n<=8, violations {viol}",
    )
    return rep


def _is_star(g) -> bool:
    from .chromatic import is_star

    return is_star(g)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[UniformHypergraph, ...]:
    reps, _ = free_classes(SearchProblem(n, 2, ()))
    return tuple(reps)


def _graphs_without_isolated(max_n: int):
    for n in range(2, max_n + 1):
        for g in _all_graphs(n):
            if g.edges and all(g.degrees):
                yield g


def _connected(g: UniformHypergraph) -> bool:
    if g.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _random_graph(n: int, p: float, rng: random.Random) -> UniformHypergraph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _random_hypergraph(n: int, r: int, p: float, rng: random.Random) -> UniformHypergraph:
    return UniformHypergraph(n, r, tuple(e for e in combinations(range(n), r) if rng.random() < p))


ORACLE_CORES = {"K3": complete_graph(3), "P3": path_graph(3), "M2": matching_graph(2)}


def random_oracle_instances(count: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.choice((3, 4))
        fn = rng.randint(2, 5)
        f = _random_graph(fn, rng.choice((0.3, 0.5, 0.8)), rng)
        if not f.edges:
            continue
        hn = rng.randint(max(r, 4), 9)
        h = _random_hypergraph(hn, r, rng.choice((0.2, 0.4, 0.6, 0.8)), rng)
        out.append((h, f, r))
    return out


def suite_oracle_equivalence(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("oracle-equivalence")
    anchor = "dedicated expansion search agrees with generic sub-hypergraph search"
    agree = hits = 0
    bad = []
    instances = random_oracle_instances(500, seed)
    for idx, (h, f, r) in enumerate(instances):
        a = contains_expansion(h, f, r) is not None
        b = contains_subhypergraph(h, expand(f, r))
        hits += a
        if a == b:
            agree += 1
        else:
            bad.append(idx)
    rep.add("random-500", anchor, agree == len(instances), f"{agree}/{len(instances)} agree ({hits} contain), disagreements {bad}")
    for name, f in ORACLE_CORES.items():
        agree = total = hits = 0
        for n in range(3, 6):
            slots = list(combinations(range(n), 3))
            for mask in range(1 << len(slots)):
                h = UniformHypergraph(n, 3, tuple(s for i, s in enumerate(slots) if mask >> i & 1))
                a = contains_expansion(h, f, 3) is not None
                b = contains_subhypergraph(h, expand(f, 3))
                total += 1
                hits += a
                agree += a == b
        rep.add(
            f"exhaustive-{name}",
            anchor,
            agree == total,
            f"F={name}, r=3: {agree}/{total} labelled hosts on n in 3..5 agree ({hits} contain)",
        )
    return rep


def suite_zykov_small(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("zykov-small")
    vals = {n: ex_graph_edges(n, [complete_graph(3)], workers=workers) for n in range(4, 9)}
    rep.add(
        "mantel",
        "ex(n, K_3) = floor(n^2/4)",
        all(r.exhaustive and r.value == n * n // 4 for n, r in vals.items()),
        ", ".join(f"n={n}: {r.value}" for n, r in vals.items()),
    )
    vals = {n: ex_graph_cliques(n, 3, [complete_graph(4)], workers=workers) for n in range(4, 8)}
    expect = {n: count_cliques(turan_graph(n, 3), 3) for n in vals}
    rep.add(
        "zykov-K4-triangles",
        "ex(n, K_3, K_4) is attained by the Turan graph T_2(n,3)",
        all(r.exhaustive and r.value == expect[n] for n, r in vals.items()),
        ", ".join(f"n={n}: {r.value} (Turan {expect[n]})" for n, r in vals.items()),
    )
    return rep


def critical_free_cores(max_n: int, chi: int) -> list[UniformHypergraph]:
    """Connected graphs on <= max_n vertices with the given chromatic number
    and no colour-critical edge."""
    out = []
    for n in range(1, max_n + 1):
        for g in _all_graphs(n):
            if g.edges and _connected(g) and chromatic_number(g) == chi and not color_critical_edges(g):
                out.append(g)
    return out


def suite_hprime_critical(workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    rep = VerifySuiteReport("hprime-critical")
    anchor = "F+ inside H'(m) forces chi(F) <= k or a colour-critical edge"
    cores = critical_free_cores(5, 4)
    viol, checked = [], 0
    for f in cores:
        for n in range(4, 10):
            m, _ = optimal_m(n, 3, 3)
            checked += 1
            if contains_expansion(h_prime(n, 3, 3, m), f, 3) is not None:
                viol.append((f.edges, n))
    rep.add(
        "r3-k3",
        anchor,
        not viol,
        f"{len(cores)} connected 4-chromatic graphs on <=5 vertices without a colour-critical edge; "
        f"{checked} (F, n) checks for n<=9, violations {viol}",
    )
    cores = critical_free_cores(6, 3)
    viol, checked = [], 0
    for f in cores:
        for n in range(3, 10):
            for m in range(2, n):
                checked += 1
                if contains_expansion(h_prime(n, 2, 2, m), f, 2) is not None:
                    viol.append((f.edges, n, m))
    rep.add(
        "r2-k2",
        anchor + " (graph case, every m)",
        not viol,
        f"{len(cores)} connected 3-chromatic graphs on <=6 vertices without a colour-critical edge; "
        f"{checked} (F, n, m) checks for n<=9, violations {viol}",
    )
    return rep


SUITES = {
    "arny": suite_heavy_shadow,
    "fat-corollary": suite_fat_graph,
    "biex-book": suite_biex_book,
    "decomp-book": suite_decomp_book,
    "optimal-m-r3": suite_optimal_m_r3,
    "counts": suite_counts,
    "lower-bounds": suite_lower_bounds,
    "oracle-equivalence": suite_oracle_equivalence,
    "zykov-small": suite_zykov_small,
    "hprime-critical": suite_hprime_critical,
}


def verify_suite(suite_id: str, workers: int = 1, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    if suite_id not in SUITES:
        raise KeyError(suite_id)
    return SUITES[suite_id](workers=workers, seed=seed)
