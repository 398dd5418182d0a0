"""Chromatic number, colourings, colour-critical edges and decomposition families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_form, contains_subhypergraph
from .errors import HypergraphError, NoEdges, TooFewColors
from .hypergraph import Graph, require_graph


@dataclass(frozen=True)
class ColoringCertificate:
    colors: tuple[int, ...]
    c: int

    def classes(self) -> list[tuple[int, ...]]:
        return [tuple(v for v, col in enumerate(self.colors) if col == i) for i in range(self.c)]


@dataclass(frozen=True)
class DecompositionFamily:
    members: tuple[Graph, ...]
    minimal: bool

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _greedy_clique(g: Graph) -> int:
    adj = g.adjacency
    best = 1 if g.n else 0
    for start in range(g.n):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(sorted(cand), key=lambda x: len(adj[x] & cand))
            clique.append(v)
            cand &= adj[v]
        best = max(best, len(clique))
    return best


def _dsatur_search(g: Graph, limit: int | None) -> tuple[int, list[int] | None]:
    """Smallest colouring with fewer than ``limit`` colours (if given), by DSATUR
    branch and bound. Returns (number of colours, colouring) or (limit, None)."""
    n = g.n
    adj = [sorted(a) for a in g.adjacency]
    lower = _greedy_clique(g)
    best_k = limit if limit is not None else n + 1
    best_col: list[int] | None = None
    color = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        v_best, key_best = -1, None
        for v in range(n):
            if color[v] < 0:
                key = (len(sat[v]), sum(1 for w in adj[v] if color[w] < 0), -v)
                if key_best is None or key > key_best:
                    v_best, key_best = v, key
        return v_best

    def rec(colored: int, used: int) -> bool:
        nonlocal best_k, best_col
        if colored == n:
            best_k, best_col = used, color.copy()
            return used <= lower
        v = pick()
        options = [c for c in range(used) if c not in sat[v]]
        if used + 1 < best_k:
            options.append(used)
        for c in options:
            color[v] = c
            touched = [w for w in adj[v] if color[w] < 0 and c not in sat[w]]
            for w in touched:
                sat[w].add(c)
            stop = rec(colored + 1, max(used, c + 1))
            for w in touched:
                sat[w].discard(c)
            color[v] = -1
            if stop:
                return True
        return False

    rec(0, 0)
    return best_k, best_col


def chromatic_number(f: Graph) -> int:
    require_graph(f, "chromatic number input")
    if f.n == 0:
        return 0
    if not f.edges:
        return 1
    k, _ = _dsatur_search(f, None)
    return k


def find_coloring(f: Graph, c: int) -> list[int] | None:
    """A proper colouring with at most ``c`` colours, or None."""
    require_graph(f, "colouring input")
    if f.n == 0:
        return []
    if not f.edges:
        return [0] * f.n if c >= 1 else None
    k, col = _dsatur_search(f, c + 1)
    return col if col is not None and k <= c else None


def proper_colorings(f: Graph, c: int) -> list[ColoringCertificate]:
    """One certificate per partition of V(F) into exactly ``c`` independent sets."""
    require_graph(f, "colouring input")
    if c < chromatic_number(f):
        raise TooFewColors(f"{c} colours are fewer than the chromatic number")
    n = f.n
    adj = [sorted(w for w in a if w < v) for v, a in enumerate(f.adjacency)]
    out: list[ColoringCertificate] = []
    color = [0] * n

    def rec(v: int, used: int) -> None:
        if n - v < c - used:
            return
        if v == n:
            if used == c:
                out.append(ColoringCertificate(tuple(color), c))
            return
        for col in range(min(used + 1, c)):
            if any(color[w] == col for w in adj[v]):
                continue
            color[v] = col
            rec(v + 1, max(used, col + 1))

    rec(0, 0)
    return out


def color_critical_edges(f: Graph) -> list[tuple[int, int]]:
    require_graph(f, "graph")
    if not f.edges:
        raise NoEdges("colour-critical edges need at least one edge")
    chi = chromatic_number(f)
    return [e for e in f.edges if find_coloring(f.without_edges([e]), chi - 1) is not None]


def decomposition_family(f: Graph, minimal: bool = True) -> DecompositionFamily:
    """Bipartite graphs left after deleting k-1 classes of a proper
    (k+1)-colouring, where k+1 = χ(F).

    Only surjective colourings are used, isolated vertices of each member are
    dropped and edgeless members are discarded. With ``minimal`` the family is
    reduced to members that contain no other member.
    """
    require_graph(f, "graph")
    chi = chromatic_number(f)
    if chi < 2:
        raise HypergraphError("decomposition family needs chromatic number at least 2")
    found: dict[bytes, Graph] = {}
    for cert in proper_colorings(f, chi):
        classes = cert.classes()
        for i, j in combinations(range(chi), 2):
            member = f.induced(classes[i] + classes[j]).drop_isolated()
            if not member.edges:
                continue
            key = canonical_form(member, max_n=max(12, member.n))
            if key not in found:
                found[key] = member
    members = [found[k] for k in sorted(found)]
    if minimal:
        members = [
            m for m in members
            if not any(o is not m and contains_subhypergraph(m, o) for o in members)
        ]
    return DecompositionFamily(tuple(members), minimal)


def biex(n: int, f: Graph, minimal: bool = True, **budget) -> int:
    """ex(n, D(F)): maximum edges of an n-vertex graph with no member of the
    decomposition family as a subgraph."""
    if n < 1:
        raise HypergraphError(f"n must be positive, got {n}")
    from .search import ex_graph_edges

    fam = decomposition_family(f, minimal)
    return ex_graph_edges(n, list(fam.members), **budget).value


def is_star(f: Graph) -> bool:
    """True iff all edges share a common vertex (vacuously for edgeless graphs)."""
    require_graph(f, "graph")
    if not f.edges:
        return True
    common = set(f.edges[0])
    for e in f.edges[1:]:
        common &= set(e)
        if not common:
            return False
    return True
