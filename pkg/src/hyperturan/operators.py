"""Shadow-type operators, links, matchings, fat sets and clique counting."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import BadTarget, SetTooLarge, UniformityTooLow
from .hypergraph import Edge, Graph, UniformHypergraph, require_graph


def shadow(h: UniformHypergraph) -> UniformHypergraph:
    """All (r-1)-subsets of hyperedges."""
    return heavy_shadow(h, 1)


def _subset_counts(h: UniformHypergraph) -> Counter:
    counts: Counter = Counter()
    for e in h.edges:
        for s in combinations(e, h.r - 1):
            counts[s] += 1
    return counts


def heavy_shadow(h: UniformHypergraph, t: int) -> UniformHypergraph:
    """(r-1)-sets lying in at least ``t`` hyperedges."""
    if h.r < 2:
        raise UniformityTooLow(f"shadow needs r >= 2, got r = {h.r}")
    if t < 1:
        raise ValueError(f"threshold must be positive, got {t}")
    counts = _subset_counts(h)
    return UniformHypergraph(h.n, h.r - 1, tuple(sorted(s for s, c in counts.items() if c >= t)))


def iterated_heavy(h: UniformHypergraph, t: int, i: int) -> UniformHypergraph:
    """Apply :func:`heavy_shadow` with the same ``t`` until uniformity ``i``."""
    if i < 1 or i >= h.r:
        raise BadTarget(f"target uniformity must lie in 1..{h.r - 1}, got {i}")
    g = h
    while g.r > i:
        g = heavy_shadow(g, t)
    return g


def link(h: UniformHypergraph, a: Iterable[int]) -> UniformHypergraph:
    """The (r-|A|)-graph {E \\ A : A ⊆ E ∈ H} on the same ground set."""
    aset = frozenset(a)
    if len(aset) >= h.r:
        raise SetTooLarge(f"|A| = {len(aset)} must be below r = {h.r}")
    out = sorted(tuple(v for v in e if v not in aset) for e in h.edges if aset.issubset(e))
    return UniformHypergraph(h.n, h.r - len(aset), tuple(out))


def max_matching(edges: Sequence[Edge], target: int | None = None) -> tuple[list[Edge], int]:
    """Branch-and-bound maximum matching over ``edges`` taken in the given order.

    Branches on the lowest-index remaining edge, include-branch first.
    Stops early once a matching of size ``target`` is found. Returns the
    matching and the number of search nodes visited.
    """
    edges = list(edges)
    m = len(edges)
    masks = [sum(1 << v for v in e) for e in edges]
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0
    goal = m if target is None else min(target, m)

    def rec(i: int, used: int) -> bool:
        nonlocal best, nodes
        nodes += 1
        if len(chosen) > len(best):
            best = chosen.copy()
            if len(best) >= goal:
                return True
        if i == m or len(chosen) + (m - i) <= len(best):
            return False
        if not masks[i] & used:
            chosen.append(i)
            if rec(i + 1, used | masks[i]):
                return True
            chosen.pop()
        return rec(i + 1, used)

    rec(0, 0)
    return [edges[i] for i in best], nodes


def matching_number(h: UniformHypergraph) -> int:
    return len(max_matching(h.edges)[0])


def _fat_links(h: UniformHypergraph, a: frozenset) -> list[Edge]:
    return [tuple(v for v in e if v not in a) for e in h.edges if a.issubset(e)]


def fat_family(h: UniformHypergraph, a: Iterable[int], t: int) -> list[Edge] | None:
    """``t`` hyperedges pairwise intersecting exactly in ``A``, or None."""
    aset = frozenset(a)
    if len(aset) >= h.r:
        raise SetTooLarge(f"|A| = {len(aset)} must be below r = {h.r}")
    if t <= 0:
        return []
    links = _fat_links(h, aset)
    if len(links) < t:
        return None
    found, _ = max_matching(links, target=t)
    if len(found) < t:
        return None
    return [tuple(sorted(aset.union(x))) for x in found]


def is_fat(h: UniformHypergraph, a: Iterable[int], t: int) -> bool:
    """Whether ``t`` hyperedges have pairwise intersection exactly ``A``.

    Edges containing A correspond to link sets E \\ A; a family of them meets
    pairwise in exactly A iff the link sets are pairwise disjoint, so this is
    a matching question on the link.
    """
    return fat_family(h, a, t) is not None


def fat_pair_graph(h: UniformHypergraph, t: int) -> Graph:
    """Graph of the t-fat pairs of ``h``."""
    if h.r < 2:
        raise UniformityTooLow(f"fat pairs need r >= 2, got r = {h.r}")
    if h.r == 2:
        # a pair lies in exactly one edge of a graph
        return UniformHypergraph(h.n, 2, h.edges if t <= 1 else ())
    pairs = sorted({p for e in h.edges for p in combinations(e, 2)})
    return UniformHypergraph(h.n, 2, tuple(p for p in pairs if is_fat(h, p, t)))


# cliques ----------------------------------------------------------------------

def _adj_masks(g: UniformHypergraph) -> list[int]:
    masks = [0] * g.n
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return masks


def clique_profile(g: Graph) -> list[int]:
    """Number of k-cliques for every k = 0..ω(G) via pivoting.

    Each leaf of the pivot tree stands for the cliques made of its ``held``
    vertices plus any subset of its ``pivots``, so it contributes
    C(pivots, k - held) k-cliques. Every clique is represented exactly once.
    """
    require_graph(g, "clique counting input")
    adj = _adj_masks(g)
    leaves: Counter = Counter()

    def rec(cand: int, held: int, pivots: int) -> None:
        if not cand:
            leaves[(held, pivots)] += 1
            return
        # pivot: candidate with most neighbours inside cand, lowest index on ties
        best_p, best_d = -1, -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > best_d:
                best_p, best_d = v, d
            c ^= low
        p = best_p
        rec(cand & adj[p], held, pivots + 1)
        rest = cand & ~adj[p] & ~(1 << p)
        excluded = 1 << p
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rec(cand & adj[v] & ~excluded, held + 1, pivots)
            excluded |= low
            rest ^= low

    rec((1 << g.n) - 1, 0, 0)
    top = max((h + p for h, p in leaves), default=0)
    prof = [0] * (top + 1)
    for (held, piv), mult in leaves.items():
        for k in range(held, held + piv + 1):
            prof[k] += mult * comb(piv, k - held)
    return prof


def count_cliques(g: Graph, r: int) -> int:
    """Exact number of r-vertex cliques of ``g``."""
    if r < 1:
        raise ValueError(f"clique order must be positive, got {r}")
    prof = clique_profile(g)
    return prof[r] if r < len(prof) else 0


def iter_hypercliques(h: UniformHypergraph, r: int):
    """Yield the r-sets all of whose h.r-subsets are hyperedges, in lex order."""
    p = h.r
    if r < p:
        raise ValueError(f"clique order {r} is below the uniformity {p}")
    edges = h.edge_set
    if p == 1:
        good = [e[0] for e in h.edges]
        yield from combinations(good, r)
        return
    adj = h.adjacency

    def rec(cur: list[int], cand: list[int]):
        if len(cur) == r:
            yield tuple(cur)
            return
        for idx, v in enumerate(cand):
            if len(cur) + 1 >= p:
                ok = all(tuple(sorted(s + (v,))) in edges for s in combinations(cur, p - 1))
                if not ok:
                    continue
            cur.append(v)
            yield from rec(cur, [w for w in cand[idx + 1:] if w in adj[v]])
            cur.pop()

    yield from rec([], list(range(h.n)))


def count_hypercliques(h: UniformHypergraph, r: int) -> int:
    """Number of copies of the complete h.r-graph on r vertices."""
    if r == h.r:
        return len(h.edges)
    return sum(1 for _ in iter_hypercliques(h, r))


def clique_expansion(g: Graph, r: int) -> UniformHypergraph:
    """r-graph whose hyperedges are the vertex sets of the r-cliques of ``g``."""
    require_graph(g, "clique expansion input")
    if r < 2:
        raise ValueError(f"order must be at least 2, got {r}")
    return UniformHypergraph(g.n, r, tuple(iter_hypercliques(g, r)))
