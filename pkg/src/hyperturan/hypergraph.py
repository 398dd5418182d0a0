"""Uniform hypergraphs on the vertex set 0..n-1, graphs as the r = 2 case,
vertex partitions, and the plain-text ``.hg`` exchange format.

``.hg`` layout::

    # comment lines start with '#'
    n r
    v1 v2 ... vr      (one hyperedge per line, 0-based)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
import re
from typing import Iterable, Sequence

from .errors import (
    ArityError,
    DuplicateVertexInEdge,
    HgParseError,
    HypergraphError,
    UniformityMismatch,
    VertexRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class UniformHypergraph:
    """An r-uniform hypergraph.

    ``edges`` is a lexicographically sorted tuple of strictly increasing
    r-tuples. Use :func:`make_hypergraph` for validated construction; the
    dataclass constructor trusts its input.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        inc: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbourhoods in the 2-shadow (for graphs: the graph itself)."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            for a, b in combinations(e, 2):
                adj[a].add(b)
                adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    @property
    def is_graph(self) -> bool:
        return self.r == 2

    def non_edges(self) -> list[Edge]:
        have = self.edge_set
        return [s for s in combinations(range(self.n), self.r) if s not in have]

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "UniformHypergraph":
        new = set(self.edges)
        new.update(tuple(sorted(e)) for e in extra)
        return UniformHypergraph(self.n, self.r, tuple(sorted(new)))

    def without_edges(self, drop: Iterable[Sequence[int]]) -> "UniformHypergraph":
        gone = {tuple(sorted(e)) for e in drop}
        return UniformHypergraph(self.n, self.r, tuple(e for e in self.edges if e not in gone))

    def relabel(self, perm: Sequence[int]) -> "UniformHypergraph":
        """Image under the vertex map ``v -> perm[v]`` (perm is a permutation of 0..n-1)."""
        return UniformHypergraph(
            self.n, self.r, tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in self.edges))
        )

    def induced(self, vertices: Iterable[int]) -> "UniformHypergraph":
        """Induced sub-hypergraph, renumbered 0..|vertices|-1 in increasing order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        keep = [tuple(pos[v] for v in e) for e in self.edges if all(v in pos for v in e)]
        return UniformHypergraph(len(vs), self.r, tuple(sorted(keep)))

    def drop_isolated(self) -> "UniformHypergraph":
        return self.induced(v for v in range(self.n) if self.degrees[v])

    def to_hg(self) -> str:
        lines = [f"{self.n} {self.r}"]
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, e)) if self.n <= 10 else "-".join(map(str, e)) for e in self.edges)
        return f"UniformHypergraph(n={self.n}, r={self.r}, edges={{{body}}})"


Graph = UniformHypergraph


def make_hypergraph(n: int, r: int, edges: Iterable[Sequence[int]]) -> UniformHypergraph:
    """Validate, sort and deduplicate ``edges`` into an r-uniform hypergraph on n vertices."""
    if n < 0:
        raise HypergraphError(f"vertex count must be non-negative, got {n}")
    if r < 1:
        raise HypergraphError(f"uniformity must be at least 1, got {r}")
    out = set()
    for raw in edges:
        e = tuple(int(v) for v in raw)
        if len(e) != r:
            raise ArityError(f"edge {e} has {len(e)} vertices, expected {r}")
        for v in e:
            if v < 0 or v >= n:
                raise VertexRange(f"vertex {v} of edge {e} is outside 0..{n - 1}")
        s = tuple(sorted(e))
        if len(set(s)) != r:
            raise DuplicateVertexInEdge(f"edge {e} repeats a vertex")
        out.add(s)
    return UniformHypergraph(n, r, tuple(sorted(out)))


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return make_hypergraph(n, 2, edges)


def empty_hypergraph(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, ())


def complete_hypergraph(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, tuple(combinations(range(n), r)))


def require_graph(g: UniformHypergraph, what: str = "argument") -> None:
    if g.r != 2:
        raise UniformityMismatch(f"{what} must be a graph (r = 2), got r = {g.r}")


# small named graphs ---------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return complete_hypergraph(n, 2)


def path_graph(n: int) -> Graph:
    """Path on n vertices."""
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(m: int) -> Graph:
    return make_graph(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_NAMED = re.compile(r"^([KCPSMB])(\d+)$|^K(\d+),(\d+)$")


def named_graph(name: str) -> Graph:
    """Parse short names: K4, C5, P3 (path on 3 vertices), S3 (K_{1,3}),
    M2 (2-edge matching), B2 (two K_3 sharing a vertex), K2,3."""
    m = _NAMED.match(name.strip())
    if not m:
        raise HypergraphError(f"unknown graph name {name!r}")
    if m.group(3):
        return complete_bipartite(int(m.group(3)), int(m.group(4)))
    kind, num = m.group(1), int(m.group(2))
    if kind == "K":
        return complete_graph(num)
    if kind == "C":
        if num < 3:
            raise HypergraphError("cycles need at least 3 vertices")
        return cycle_graph(num)
    if kind == "P":
        return path_graph(num)
    if kind == "S":
        return star_graph(num)
    if kind == "M":
        return matching_graph(num)
    from .constructions import book_graph

    return book_graph(num)


# partitions -------------------------------------------------------------------

@dataclass(frozen=True)
class VertexPartition:
    """Ordered partition of 0..n-1 into ``k`` parts."""

    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[Iterable[int]], allow_empty: bool = False) -> "VertexPartition":
        ps = tuple(tuple(sorted(p)) for p in parts)
        seen = [v for p in ps for v in p]
        if sorted(seen) != list(range(n)):
            raise HypergraphError("parts must be disjoint and cover 0..n-1")
        if not allow_empty and any(not p for p in ps):
            raise HypergraphError("empty part")
        return cls(ps)

    @classmethod
    def contiguous(cls, sizes: Sequence[int]) -> "VertexPartition":
        parts, start = [], 0
        for s in sizes:
            parts.append(tuple(range(start, start + s)))
            start += s
        return cls(tuple(parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def part_of(self) -> list[int]:
        out = [0] * self.n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return out


# .hg format -------------------------------------------------------------------

def parse_hg(text: str) -> UniformHypergraph:
    header = None
    edges: list[tuple[int, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            nums = [int(x) for x in s.split()]
        except ValueError:
            raise HgParseError(f"line {lineno}: non-integer token in {s!r}") from None
        if header is None:
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 1:
                raise HgParseError(f"line {lineno}: header must be 'n r' with n >= 0, r >= 1")
            header = nums
            continue
        if len(nums) != header[1]:
            raise HgParseError(f"line {lineno}: expected {header[1]} vertices, got {len(nums)}")
        if any(v < 0 or v >= header[0] for v in nums):
            raise HgParseError(f"line {lineno}: vertex outside 0..{header[0] - 1}")
        if len(set(nums)) != len(nums):
            raise HgParseError(f"line {lineno}: repeated vertex in edge")
        edges.append(tuple(nums))
    if header is None:
        raise HgParseError("missing 'n r' header line")
    return make_hypergraph(header[0], header[1], edges)


def read_hg(path: str | Path) -> UniformHypergraph:
    return parse_hg(Path(path).read_text())


def write_hg(h: UniformHypergraph, path: str | Path) -> None:
    Path(path).write_text(h.to_hg())
