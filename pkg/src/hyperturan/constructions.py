"""Extremal constructions and their edge counts.

Parts are always contiguous blocks of vertices. Balanced parts differ in
size by at most one, larger parts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb, prod
from typing import Sequence

from .errors import BadM, HypergraphError, KTooSmall
from .hypergraph import Graph, UniformHypergraph, VertexPartition, make_graph


def balanced_sizes(n: int, k: int) -> list[int]:
    q, extra = divmod(n, k)
    return [q + 1] * extra + [q] * (k - extra)


@dataclass(frozen=True)
class PartSizeProfile:
    sizes: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def partition(self, offset: int = 0) -> VertexPartition:
        parts, start = [], offset
        for s in self.sizes:
            parts.append(tuple(range(start, start + s)))
            start += s
        return VertexPartition(tuple(parts))


def elementary_symmetric(values: Sequence[int], j: int) -> int:
    """e_j(values) by the usual dynamic programme."""
    e = [1] + [0] * j
    for x in values:
        for i in range(j, 0, -1):
            e[i] += e[i - 1] * x
    return e[j]


def complete_multipartite(sizes: Sequence[int], r: int, offset: int = 0, n: int | None = None) -> UniformHypergraph:
    """Transversal r-sets over contiguous parts of the given sizes."""
    parts = PartSizeProfile(tuple(sizes)).partition(offset).parts
    total = offset + sum(sizes) if n is None else n
    edges = []
    for chosen in combinations(parts, r):
        edges.extend(product(*chosen))
    return UniformHypergraph(total, r, tuple(sorted(edges)))


def turan_graph(n: int, k: int) -> Graph:
    """T_2(n, k): complete balanced k-partite graph."""
    if k < 1:
        raise KTooSmall(f"k must be positive, got {k}")
    return complete_multipartite(balanced_sizes(n, k), 2, n=n)


def _check_kr(k: int, r: int) -> None:
    if r < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {r}")
    if k < r:
        raise KTooSmall(f"need k >= r, got k = {k}, r = {r}")


def turan_hypergraph(n: int, k: int, r: int) -> UniformHypergraph:
    _check_kr(k, r)
    return complete_multipartite(balanced_sizes(n, k), r, n=n)


def turan_count(n: int, k: int, r: int) -> int:
    """t_r(n, k) = e_r(balanced part sizes)."""
    _check_kr(k, r)
    return elementary_symmetric(balanced_sizes(n, k), r)


def turan_cone(n: int, k: int, r: int, i: int) -> UniformHypergraph:
    """T_r(n-i, k) on vertices i..n-1 plus every r-set meeting {0, ..., i-1}."""
    _check_kr(k, r)
    if i < 0 or i > n:
        raise HypergraphError(f"need 0 <= i <= n, got i = {i}")
    base = complete_multipartite(balanced_sizes(n - i, k), r, offset=i, n=n)
    apex = [s for s in combinations(range(n), r) if s[0] < i]
    return UniformHypergraph(n, r, tuple(sorted(set(base.edges).union(apex))))


def turan_cone_count(n: int, k: int, r: int, i: int) -> int:
    _check_kr(k, r)
    return sum(comb(n - j, r - 1) for j in range(1, i + 1)) + turan_count(n - i, k, r)


def _h_sizes(n: int, k: int, r: int, m: int) -> list[int]:
    _check_kr(k, r)
    if m < 1 or m > n - k + 1:
        raise BadM(f"m must lie in 1..{n - k + 1}, got {m}")
    return [m] + balanced_sizes(n - m, k - 1)


def h_part(n: int, k: int, r: int, m: int) -> UniformHypergraph:
    """Complete k-partite r-graph with first part of order m and the other
    k-1 parts balanced."""
    return complete_multipartite(_h_sizes(n, k, r, m), r, n=n)


def h_prime(n: int, k: int, r: int, m: int) -> UniformHypergraph:
    """H(m) plus every r-set through u = 0 and v = 1, and every r-set made of
    u and r-1 vertices outside the first part."""
    if m < 2:
        raise BadM(f"h_prime needs m >= 2, got {m}")
    base = h_part(n, k, r, m)
    extra = set(base.edges)
    for s in combinations(range(n), r):
        if s[0] == 0 and (s[1] == 1 or s[1] >= m):
            extra.add(s)
    return UniformHypergraph(n, r, tuple(sorted(extra)))


def h_prime_count(n: int, k: int, r: int, m: int) -> int:
    if m < 2:
        raise BadM(f"h_prime needs m >= 2, got {m}")
    sizes = _h_sizes(n, k, r, m)
    rest = sizes[1:]
    return (
        elementary_symmetric(sizes, r)
        + comb(n - 2, r - 2)
        + comb(n - m, r - 1)
        - elementary_symmetric(rest, r - 1)
    )


def feasible_m(n: int, k: int, r: int) -> range:
    _check_kr(k, r)
    return range(2, n - k + 2)


def h_prime_counts(n: int, k: int, r: int) -> dict[int, int]:
    return {m: h_prime_count(n, k, r, m) for m in feasible_m(n, k, r)}


def optimal_m(n: int, k: int, r: int) -> tuple[int, int]:
    """(m, edges) maximising |E(H'(m))|; the smallest m wins ties."""
    _check_kr(k, r)
    if n < k + 1:
        raise BadM(f"need n >= k + 1, got n = {n}, k = {k}")
    counts = h_prime_counts(n, k, r)
    best = max(counts.values())
    m = min(m for m, c in counts.items() if c == best)
    return m, best


def optimal_m_set(n: int, k: int, r: int) -> list[int]:
    counts = h_prime_counts(n, k, r)
    best = max(counts.values())
    return [m for m, c in counts.items() if c == best]


def book_graph(k: int) -> Graph:
    """Two copies of K_{k+1} sharing vertex 0."""
    if k < 1:
        raise HypergraphError(f"k must be positive, got {k}")
    first = range(0, k + 1)
    second = [0] + list(range(k + 1, 2 * k + 1))
    edges = list(combinations(first, 2)) + list(combinations(second, 2))
    return make_graph(2 * k + 1, edges)


def fixed_vertex_hypergraph(n: int, r: int) -> UniformHypergraph:
    """All r-sets containing vertex 0."""
    if n < r:
        raise HypergraphError(f"need n >= r, got n = {n}, r = {r}")
    return UniformHypergraph(n, r, tuple(s for s in combinations(range(n), r) if s[0] == 0))


def transversal_count(sizes: Sequence[int], r: int) -> int:
    """Brute product-sum over r-subsets of parts (reference for the DP)."""
    return sum(prod(c) for c in combinations(sizes, r))
