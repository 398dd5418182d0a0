"""Finite structure diagnostic: fat-pair graph, a k-partition with the fewest
internal fat pairs, and the vertices with many fat neighbours inside their
own part (candidates for the exceptional set B)."""

from __future__ import annotations

import random

from .errors import HypergraphError
from .hypergraph import UniformHypergraph, VertexPartition
from .operators import fat_pair_graph

EXACT_LIMIT = 12


def _exact_partition(adj: list[set[int]], n: int, k: int) -> tuple[list[int], int]:
    """Assignment minimising edges inside parts; first optimum in
    restricted-growth order wins."""
    best_cost = [sum(len(a) for a in adj) // 2 + 1]
    best_assign: list[list[int]] = [[0] * n]
    assign = [-1] * n

    def rec(v: int, used: int, cost: int) -> None:
        if cost >= best_cost[0]:
            return
        if v == n:
            best_cost[0] = cost
            best_assign[0] = assign.copy()
            return
        for part in range(min(used + 1, k)):
            add = sum(1 for w in adj[v] if w < v and assign[w] == part)
            assign[v] = part
            rec(v + 1, max(used, part + 1), cost + add)
        assign[v] = -1

    rec(0, 0, 0)
    return best_assign[0], best_cost[0]


def _local_partition(adj: list[set[int]], n: int, k: int, rng_seed: int) -> tuple[list[int], int]:
    rng = random.Random(rng_seed)
    assign = [v % k for v in range(n)]
    rng.shuffle(assign)
    improved = True
    while improved:
        improved = False
        for v in range(n):
            counts = [0] * k
            for w in adj[v]:
                counts[assign[w]] += 1
            target = min(range(k), key=lambda p: (counts[p], p))
            if counts[target] < counts[assign[v]]:
                assign[v] = target
                improved = True
    cost = sum(1 for v in range(n) for w in adj[v] if w > v and assign[w] == assign[v])
    return assign, cost


def analyze_structure(
    h: UniformHypergraph,
    k: int,
    t: int,
    theta: float = 0.25,
    exact_limit: int = EXACT_LIMIT,
    rng_seed: int = 0,
) -> dict:
    """Report the fat-pair graph partition and B-candidates.

    A vertex is a B-candidate when its fat-pair degree inside its own part is
    at least ``theta * n``. Partitions are exact up to ``exact_limit``
    vertices and found by local search beyond.
    """
    if k < 1:
        raise HypergraphError(f"k must be positive, got {k}")
    g = fat_pair_graph(h, t)
    n = h.n
    adj = [set(a) for a in g.adjacency]
    exact = n <= exact_limit
    if k == 1:
        assign, cost = [0] * n, len(g.edges)
    elif exact:
        assign, cost = _exact_partition(adj, n, k)
    else:
        assign, cost = _local_partition(adj, n, k, rng_seed)
    parts = VertexPartition.from_parts(n, [[v for v in range(n) if assign[v] == p] for p in range(k)], allow_empty=True)
    part_degree = [[sum(1 for w in adj[v] if assign[w] == p) for p in range(k)] for v in range(n)]
    internal = [part_degree[v][assign[v]] for v in range(n)]
    threshold = theta * n
    return {
        "n": n,
        "k": k,
        "t": t,
        "theta": theta,
        "fat_pairs": [list(e) for e in g.edges],
        "partition": [list(p) for p in parts.parts],
        "internal_edges": cost,
        "internal_degree": internal,
        "part_degree": part_degree,
        "b_candidates": [v for v in range(n) if internal[v] >= threshold and internal[v] > 0],
        "exact": exact or k == 1,
        "degenerate": k == 1,
    }
