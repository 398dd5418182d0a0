"""Exact extremal numbers by exhaustive isomorph-free search.

Freeness from a forbidden family is closed under deleting edges, so every
free hypergraph with e+1 edges arises from a free one with e edges by adding
a single edge. The search therefore walks the iso classes level by level:
each class is extended by every missing r-set, children are canonicalised,
and only new free classes are kept. Results never depend on visiting order.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .canon import canonical_form, contains_subhypergraph, from_key, canonical_hypergraph
from .chromatic import chromatic_number, color_critical_edges, is_star
from .constructions import optimal_m, turan_cone_count
from .errors import HypergraphError, SeedNotFree
from .expansion import contains_expansion
from .hypergraph import Graph, UniformHypergraph, empty_hypergraph, require_graph
from .operators import clique_expansion, count_cliques, count_hypercliques

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_SECONDS_BUDGET = 300.0


@dataclass(frozen=True)
class Forbidden:
    """A forbidden pattern: a plain sub-hypergraph or the expansion of a graph."""

    kind: str
    graph: UniformHypergraph

    def __post_init__(self):
        if self.kind not in ("subgraph", "expansion"):
            raise HypergraphError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "expansion":
            require_graph(self.graph, "expansion core")

    def occurs_in(self, host: UniformHypergraph) -> bool:
        if self.kind == "subgraph":
            return contains_subhypergraph(host, self.graph)
        return contains_expansion(host, self.graph, host.r) is not None

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.graph.n, "r": self.graph.r, "edges": [list(e) for e in self.graph.edges]}


@dataclass(frozen=True)
class Budget:
    nodes: int = DEFAULT_NODE_BUDGET
    seconds: float = DEFAULT_SECONDS_BUDGET


@dataclass(frozen=True)
class SearchProblem:
    """Maximise an objective over n-vertex r-graphs avoiding every pattern.

    ``objective`` is None for the edge count, or q for the number of
    q-vertex cliques (complete r-graphs on q vertices).
    """

    n: int
    r: int
    forbidden: tuple[Forbidden, ...]
    objective: int | None = None
    budget: Budget = field(default_factory=Budget)

    def __post_init__(self):
        for p in self.forbidden:
            if p.kind == "subgraph" and p.graph.r != self.r:
                raise HypergraphError("subgraph pattern uniformity differs from host uniformity")
        if self.objective is not None and self.objective < self.r:
            raise HypergraphError("clique objective order is below the host uniformity")

    def is_free(self, h: UniformHypergraph) -> bool:
        return not any(p.occurs_in(h) for p in self.forbidden)

    def score(self, h: UniformHypergraph) -> int:
        if self.objective is None:
            return len(h.edges)
        if self.r == 2:
            return count_cliques(h, self.objective)
        return count_hypercliques(h, self.objective)

    def describe(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "forbidden": [p.to_json() for p in self.forbidden],
            "objective": "edges" if self.objective is None else f"cliques:{self.objective}",
        }


@dataclass
class SearchResult:
    value: int
    witness: UniformHypergraph
    exhaustive: bool
    nodes: int
    elapsed: float
    problem: SearchProblem | None = None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "problem": self.problem.describe() if self.problem else None,
            "value": self.value,
            "witness_edges": [list(e) for e in self.witness.edges],
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _expand_chunk(args) -> tuple[list[bytes], list[bytes], int]:
    problem, keys = args
    free: set[bytes] = set()
    bad: set[bytes] = set()
    nodes = 0
    for key in keys:
        h = from_key(key)
        for s in h.non_edges():
            nodes += 1
            ck = canonical_form(h.with_edges([s]))
            if ck in free or ck in bad:
                continue
            (free if problem.is_free(from_key(ck)) else bad).add(ck)
    return sorted(free), sorted(bad), nodes


def enumerate_free_classes(problem: SearchProblem, workers: int = 1):
    """Walk all iso classes of free r-graphs on ``problem.n`` vertices.

    Yields (edge count, sorted list of canonical keys) per level and finally
    returns (exhaustive flag, node count) through StopIteration.value.
    """
    start = time.monotonic()
    n, r = problem.n, problem.r
    empty = empty_hypergraph(n, r)
    if not problem.is_free(empty):
        return True, 0
    level = [canonical_form(empty)]
    nodes = 0
    edges = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while level:
            yield edges, level
            if edges == comb(n, r):
                break
            nxt: set[bytes] = set()
            bad: set[bytes] = set()
            if pool is None:
                for key in level:
                    h = from_key(key)
                    for s in h.non_edges():
                        nodes += 1
                        if nodes > problem.budget.nodes or time.monotonic() - start > problem.budget.seconds:
                            if nxt:
                                yield edges + 1, sorted(nxt)
                            return False, nodes
                        ck = canonical_form(h.with_edges([s]))
                        if ck in nxt or ck in bad:
                            continue
                        (nxt if problem.is_free(from_key(ck)) else bad).add(ck)
            else:
                size = max(1, len(level) // (4 * workers))
                chunks = [(problem, level[i:i + size]) for i in range(0, len(level), size)]
                for free, _, cnt in pool.map(_expand_chunk, chunks):
                    nxt.update(free)
                    nodes += cnt
                if nodes > problem.budget.nodes or time.monotonic() - start > problem.budget.seconds:
                    if nxt:
                        yield edges + 1, sorted(nxt)
                    return False, nodes
            level = sorted(nxt)
            edges += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return True, nodes


def free_classes(problem: SearchProblem, workers: int = 1) -> tuple[list[UniformHypergraph], bool]:
    """Canonical representatives of every free iso class, by edge count then key."""
    gen = enumerate_free_classes(problem, workers)
    reps: list[UniformHypergraph] = []
    while True:
        try:
            _, keys = next(gen)
        except StopIteration as stop:
            exhaustive, _ = stop.value
            return reps, exhaustive
        reps.extend(from_key(k) for k in keys)


def search(problem: SearchProblem, workers: int = 1) -> SearchResult:
    """Exact optimum (or best-so-far when the budget runs out)."""
    start = time.monotonic()
    full = UniformHypergraph(problem.n, problem.r, tuple(combinations(range(problem.n), problem.r)))
    if problem.is_free(full):
        # both objectives are monotone, so the complete r-graph wins
        return SearchResult(problem.score(full), full, True, 1, time.monotonic() - start, problem)
    best_value, best_key = None, None
    gen = enumerate_free_classes(problem, workers)
    while True:
        try:
            _, keys = next(gen)
        except StopIteration as stop:
            exhaustive, nodes = stop.value
            break
        if problem.objective is None:
            # every level has more edges than the previous one
            best_value, best_key = len(from_key(keys[0]).edges), keys[0]
            continue
        for key in keys:
            val = problem.score(from_key(key))
            if best_value is None or val > best_value or (val == best_value and key < best_key):
                best_value, best_key = val, key
    if best_key is None:
        # even the empty hypergraph contains a pattern
        witness = empty_hypergraph(problem.n, problem.r)
        return SearchResult(0, witness, True, nodes, time.monotonic() - start, problem)
    return SearchResult(best_value, from_key(best_key), exhaustive, nodes, time.monotonic() - start, problem)


def _budget(budget_nodes: int | None, budget_secs: float | None) -> Budget:
    return Budget(
        DEFAULT_NODE_BUDGET if budget_nodes is None else budget_nodes,
        DEFAULT_SECONDS_BUDGET if budget_secs is None else budget_secs,
    )


def ex_graph_edges(
    n: int,
    forbidden: Sequence[Graph],
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    workers: int = 1,
) -> SearchResult:
    """ex(n, family): most edges in an n-vertex graph with no forbidden subgraph."""
    pats = tuple(Forbidden("subgraph", g) for g in forbidden)
    return search(SearchProblem(n, 2, pats, None, _budget(budget_nodes, budget_secs)), workers)


def ex_graph_cliques(
    n: int,
    r: int,
    forbidden: Sequence[Graph],
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    workers: int = 1,
) -> SearchResult:
    """ex(n, K_r, family): most r-cliques in an n-vertex family-free graph."""
    pats = tuple(Forbidden("subgraph", g) for g in forbidden)
    objective = None if r == 2 else r
    return search(SearchProblem(n, 2, pats, objective, _budget(budget_nodes, budget_secs)), workers)


def ex_hypergraph(
    n: int,
    r: int,
    f: Graph,
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    workers: int = 1,
    method: str = "orderly",
) -> SearchResult:
    """ex_r(n, F^(r)+). ``method='branch'`` runs the edge-inclusion branch and
    bound instead; it returns the same value, but its witness is simply the
    first optimum found (canonicalised), not the minimal one."""
    problem = SearchProblem(n, r, (Forbidden("expansion", f),), None, _budget(budget_nodes, budget_secs))
    if method == "orderly":
        return search(problem, workers)
    if method == "branch":
        return branch_and_bound(problem)
    raise HypergraphError(f"unknown method {method!r}")


def ex_hyper_cliques(
    n: int,
    p: int,
    q: int,
    f: Graph,
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    workers: int = 1,
) -> SearchResult:
    """ex_p(n, K_q^p, F^(p)+): most complete p-graphs on q vertices."""
    problem = SearchProblem(n, p, (Forbidden("expansion", f),), q, _budget(budget_nodes, budget_secs))
    return search(problem, workers)


def branch_and_bound(problem: SearchProblem) -> SearchResult:
    """Include/exclude every r-set in lexicographic order, include first.

    Prunes when the current edges plus all undecided r-sets cannot beat the
    best value found; only the edge-count objective is supported.
    """
    if problem.objective is not None:
        raise HypergraphError("branch and bound supports the edge objective only")
    start = time.monotonic()
    slots = list(combinations(range(problem.n), problem.r))
    total = len(slots)
    chosen: list[tuple[int, ...]] = []
    best: list = [-1, ()]
    nodes = 0
    hit = False

    def rec(i: int) -> None:
        nonlocal nodes, hit
        if hit:
            return
        nodes += 1
        if nodes > problem.budget.nodes or time.monotonic() - start > problem.budget.seconds:
            hit = True
            return
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), tuple(chosen)
        if i == total or len(chosen) + (total - i) <= best[0]:
            return
        chosen.append(slots[i])
        if problem.is_free(UniformHypergraph(problem.n, problem.r, tuple(chosen))):
            rec(i + 1)
        chosen.pop()
        rec(i + 1)

    rec(0)
    witness = UniformHypergraph(problem.n, problem.r, best[1])
    if problem.n <= 12:
        witness = canonical_hypergraph(witness)
    return SearchResult(max(best[0], 0), witness, not hit, nodes, time.monotonic() - start, problem)


def lower_bound_local_search(
    problem: SearchProblem,
    seed: UniformHypergraph,
    restarts: int = 1,
    steps: int = 1000,
    rng_seed: int = 0,
) -> SearchResult:
    """Hill climbing by random add and swap moves that keep the host free.

    Moves are accepted when the objective does not drop. Deterministic for a
    fixed ``rng_seed``; never returns anything worse than the seed.
    """
    start = time.monotonic()
    if (seed.n, seed.r) != (problem.n, problem.r):
        raise HypergraphError("seed shape does not match the problem")
    if not problem.is_free(seed):
        raise SeedNotFree("seed contains a forbidden pattern")
    rng = random.Random(rng_seed)
    seed_score = problem.score(seed)
    best, best_score = seed, seed_score
    nodes = 0
    for _ in range(restarts):
        cur, cur_score = seed, seed_score
        for _ in range(steps):
            missing = cur.non_edges()
            if not missing:
                break
            s = rng.choice(missing)
            if cur.edges and rng.random() < 0.5:
                drop = rng.choice(cur.edges)
                cand = cur.without_edges([drop]).with_edges([s])
            else:
                cand = cur.with_edges([s])
            nodes += 1
            if not problem.is_free(cand):
                continue
            sc = problem.score(cand)
            if sc >= cur_score:
                cur, cur_score = cand, sc
                if sc > best_score:
                    best, best_score = cand, sc
    return SearchResult(best_score, best, False, nodes, time.monotonic() - start, problem)


# gap table --------------------------------------------------------------------

GAP_COLUMNS = ["n", "lb_clique", "clique_exhaustive", "lb_fixed", "lb_turan_cone", "lb_hprime", "value", "exhaustive"]


def _components(f: Graph) -> list[list[int]]:
    seen, comps = set(), []
    for s in range(f.n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in f.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def gap_table(
    f: Graph,
    r: int,
    n_range: Iterable[int],
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    local_steps: int = 200,
    rng_seed: int = 0,
    workers: int = 1,
) -> list[dict]:
    """Lower-bound constructions next to the (exhaustive when feasible) value
    of ex_r(n, F^(r)+), one row per n. Reports; asserts nothing."""
    require_graph(f, "core")
    chi = chromatic_number(f)
    k = chi - 1
    star = is_star(f)
    critical = bool(f.edges) and bool(color_critical_edges(f))
    comps = _components(f.drop_isolated()) if f.edges else []
    top = [c for c in comps if chromatic_number(f.induced(c)) == chi]
    top_critical = all(color_critical_edges(f.induced(c)) for c in top)
    extra_p = list(range(3, r))
    rows = []
    for n in n_range:
        row: dict = {"n": n}
        cl = ex_graph_cliques(n, r, [f], budget_nodes, budget_secs, workers)
        row["lb_clique"] = len(clique_expansion(cl.witness, r).edges)
        row["clique_exhaustive"] = cl.exhaustive
        row["lb_fixed"] = comb(n - 1, r - 1) if not star and n >= r else None
        s = len(top)
        if k >= r and top_critical and s >= 1 and n - (s - 1) >= 0:
            row["lb_turan_cone"] = turan_cone_count(n, k, r, s - 1)
        else:
            row["lb_turan_cone"] = None
        if k >= r and not critical and n >= k + 1 and n - k + 1 >= 2:
            row["lb_hprime"] = optimal_m(n, k, r)[1]
        else:
            row["lb_hprime"] = None
        for p in extra_p:
            res = ex_hyper_cliques(n, p, r, f, budget_nodes, budget_secs, workers)
            row[f"cliques_p{p}"] = res.value
            row[f"cliques_p{p}_exhaustive"] = res.exhaustive
        ex = ex_hypergraph(n, r, f, budget_nodes, budget_secs, workers)
        value = ex.value
        if not ex.exhaustive and local_steps:
            problem = SearchProblem(n, r, (Forbidden("expansion", f),))
            value = max(value, lower_bound_local_search(problem, ex.witness, 1, local_steps, rng_seed).value)
        row["value"] = value
        row["exhaustive"] = ex.exhaustive
        rows.append(row)
    return rows
