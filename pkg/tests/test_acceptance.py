"""Acceptance checks, one per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

import json
import subprocess
import sys
import time
from itertools import combinations
from math import comb

import pytest

from hyperturan.canon import contains_subhypergraph, is_isomorphic
from hyperturan.chromatic import decomposition_family
from hyperturan.constructions import (
    book_graph,
    h_prime,
    optimal_m,
    optimal_m_set,
    turan_cone,
    turan_cone_count,
    turan_count,
    turan_graph,
    turan_hypergraph,
)
from hyperturan.expansion import contains_expansion, default_t, expand, is_expansion_free
from hyperturan.hypergraph import (
    UniformHypergraph,
    complete_graph,
    matching_graph,
    path_graph,
    star_graph,
)
from hyperturan.operators import clique_expansion, count_cliques, fat_pair_graph, heavy_shadow
from hyperturan.search import Forbidden, SearchProblem, ex_graph_cliques, ex_graph_edges, ex_hypergraph, free_classes
from hyperturan.verify import DEFAULT_SEED, SUITES, critical_free_cores, random_oracle_instances

K3 = complete_graph(3)
CORES = {"K3": K3, "P3": path_graph(3), "S3": star_graph(3)}


def mantel():
    start = time.monotonic()
    vals = {n: ex_graph_edges(n, [K3]) for n in range(4, 9)}
    secs = time.monotonic() - start
    ok = all(r.exhaustive and r.value == n * n // 4 for n, r in vals.items()) and secs <= 10
    return ok, f"values {[r.value for r in vals.values()]} for n=4..8 in {secs:.1f}s (limit 10s)"


def zykov():
    start = time.monotonic()
    got = {n: ex_graph_cliques(n, 3, [complete_graph(4)]) for n in range(4, 8)}
    secs = time.monotonic() - start
    want = {n: count_cliques(turan_graph(n, 3), 3) for n in got}
    ok = all(r.exhaustive and r.value == want[n] for n, r in got.items()) and secs <= 60
    return ok, f"values {[r.value for r in got.values()]} vs Turan {list(want.values())} in {secs:.1f}s (limit 60s)"


def biex_books():
    bowtie = book_graph(2)
    fam = decomposition_family(bowtie)
    vals = [ex_graph_edges(n, list(fam.members)).value for n in range(4, 9)]
    found = {}
    for minimal in (True, False):
        members = decomposition_family(bowtie, minimal).members
        found[minimal] = (
            any(is_isomorphic(m, matching_graph(2)) for m in members),
            any(is_isomorphic(m, star_graph(2)) for m in members),
        )
    ok = vals == [1] * 5 and all(a and b for a, b in found.values())
    return ok, f"biex n=4..8: {vals}; family has matching/star: reduced {found[True]}, full {found[False]}"


def _shadow_check(operator):
    start = time.monotonic()
    checked = bad = 0
    complete = True
    for f in CORES.values():
        t = default_t(f, 3)
        for n in range(1, 7):
            reps, exhaustive = free_classes(SearchProblem(n, 3, (Forbidden("expansion", f),)))
            complete &= exhaustive
            for h in reps:
                checked += 1
                bad += not is_expansion_free(operator(h, t), f, 2)
    return complete and bad == 0, checked, bad, time.monotonic() - start


def heavy_shadow_free():
    ok, checked, bad, secs = _shadow_check(heavy_shadow)
    ok = ok and secs <= 300
    return ok, f"{checked} iso classes, {bad} counterexamples, {secs:.1f}s (limit 300s)"


def fat_graph_free():
    ok, checked, bad, secs = _shadow_check(fat_pair_graph)
    return ok, f"{checked} iso classes, {bad} counterexamples"


def sandwich():
    parts = []
    ok = True
    for n in range(4, 7):
        ex = ex_hypergraph(n, 3, K3)
        best = ex_graph_cliques(n, 3, [K3])
        lb_clique = len(clique_expansion(best.witness, 3).edges)
        lb_fixed = comb(n - 1, 2)
        ok &= ex.exhaustive and best.exhaustive and ex.value >= lb_clique and ex.value >= lb_fixed
        parts.append(f"n={n}: {ex.value} >= {lb_clique}, {lb_fixed}")
    return ok, "; ".join(parts)


def optimal_m_formula():
    misses = []
    for k in (3, 4, 5):
        for n in range(k + 2, 31):
            m = (n - 1) // (k - 1)
            arg = optimal_m_set(n, k, 3)
            if m not in arg:
                misses.append(f"(k={k},n={n}) formula {m} argmax {arg}")
    return not misses, f"{72 - len(misses)}/72 in argmax" + (f"; first misses: {', '.join(misses[:3])}" if misses else "")


def counts():
    bad = []
    for r in range(2, 5):
        for k in range(r, 6):
            for n in range(0, 16):
                if turan_count(n, k, r) != len(turan_hypergraph(n, k, r).edges):
                    bad.append(("t", n, k, r))
                for i in range(0, n + 1):
                    if turan_cone_count(n, k, r, i) != len(turan_cone(n, k, r, i).edges):
                        bad.append(("cone", n, k, r, i))
    h = len(h_prime(7, 3, 3, 3).edges)
    return not bad and h == 19, f"{len(bad)} count mismatches; |h_prime(7,3,3,3)| = {h}"


def oracle():
    agree = total = 0
    for h, f, r in random_oracle_instances(500, DEFAULT_SEED):
        total += 1
        agree += (contains_expansion(h, f, r) is not None) == contains_subhypergraph(h, expand(f, r))
    for f in (K3, path_graph(3), matching_graph(2)):
        for n in range(3, 6):
            slots = list(combinations(range(n), 3))
            for mask in range(1 << len(slots)):
                h = UniformHypergraph(n, 3, tuple(s for i, s in enumerate(slots) if mask >> i & 1))
                total += 1
                agree += (contains_expansion(h, f, 3) is not None) == contains_subhypergraph(h, expand(f, 3))
    return agree == total, f"{agree}/{total} agree"


def hprime_critical():
    cores = critical_free_cores(5, 4)
    viol = checked = 0
    for f in cores:
        for n in range(4, 10):
            checked += 1
            viol += contains_expansion(h_prime(n, 3, 3, optimal_m(n, 3, 3)[0]), f, 3) is not None
    note = " (vacuous: no such core exists)" if not cores else ""
    return viol == 0, f"{len(cores)} qualifying cores on <=5 vertices, {checked} checks, {viol} violations{note}"


def _suite_json(suite, jobs):
    code = (
        "import sys; from hyperturan.verify import verify_suite; "
        f"sys.stdout.write(verify_suite({suite!r}, workers={jobs}).dumps())"
    )
    return subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout


def determinism():
    differ = []
    for suite in SUITES:
        runs = [_suite_json(suite, 1), _suite_json(suite, 1), _suite_json(suite, 2)]
        json.loads(runs[0])
        if len(set(runs)) != 1:
            differ.append(suite)
    return not differ, f"{len(SUITES)} suites x (2 sequential + 1 parallel) runs; differing: {differ}"


CRITERIA = [
    (1, "Mantel regression", mantel),
    (2, "Zykov small instances", zykov),
    (3, "biex of books", biex_books),
    (4, "heavy-shadow suite", heavy_shadow_free),
    (5, "fat-graph suite", fat_graph_free),
    (6, "lower-bound sandwich", sandwich),
    (7, "optimal-m formula", optimal_m_formula),
    (8, "count formulas", counts),
    (9, "oracle equivalence", oracle),
    (10, "H' criticality", hprime_critical),
    (11, "determinism", determinism),
]


def report(num, name, check):
    ok, detail = check()
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {num} ({name}): {detail}"


@pytest.mark.parametrize("num, name, check", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, line = report(num, name, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
