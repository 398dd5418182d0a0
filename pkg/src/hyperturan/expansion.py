"""Expansions F^(r)+ and deciding whether a host r-graph contains one."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionViolated, UniformityMismatch
from .hypergraph import Edge, Graph, UniformHypergraph, require_graph
from .operators import fat_family


@dataclass(frozen=True)
class ExpansionWitness:
    """Core embedding plus one host hyperedge per core edge."""

    core_map: dict[int, int]
    edge_assignment: dict[tuple[int, int], Edge] = field(default_factory=dict)

    def extension_vertices(self, edge: tuple[int, int]) -> set[int]:
        a, b = edge
        return set(self.edge_assignment[edge]) - {self.core_map[a], self.core_map[b]}

    def to_json(self) -> dict:
        return {
            "core_map": {str(k): v for k, v in sorted(self.core_map.items())},
            "edge_assignment": [
                {"core_edge": list(e), "hyperedge": list(h)} for e, h in sorted(self.edge_assignment.items())
            ],
        }


def expand(f: Graph, r: int) -> UniformHypergraph:
    """F^(r)+ with core vertices first, then r-2 new vertices per core edge
    in lexicographic edge order."""
    require_graph(f, "core")
    if r < 2:
        raise ValueError(f"uniformity must be at least 2, got {r}")
    nxt = f.n
    edges = []
    for a, b in f.edges:
        edges.append(tuple(sorted((a, b, *range(nxt, nxt + r - 2)))))
        nxt += r - 2
    return UniformHypergraph(nxt, r, tuple(sorted(edges)))


def default_t(f: Graph, r: int) -> int:
    """(r-2)|E(F)| + |V(F)|."""
    return (r - 2) * len(f.edges) + f.n


def check_witness(host: UniformHypergraph, f: Graph, w: ExpansionWitness) -> bool:
    """Verify every witness invariant against ``host``."""
    if sorted(w.core_map) != list(range(f.n)):
        return False
    image = list(w.core_map.values())
    if len(set(image)) != len(image) or any(x < 0 or x >= host.n for x in image):
        return False
    if sorted(w.edge_assignment) != list(f.edges):
        return False
    used = set(image)
    for e in f.edges:
        he = w.edge_assignment[e]
        if he not in host.edge_set:
            return False
        a, b = w.core_map[e[0]], w.core_map[e[1]]
        if a not in he or b not in he:
            return False
        ext = set(he) - {a, b}
        if ext & used:
            return False
        used |= ext
    return True


def _core_order(f: Graph) -> list[int]:
    adj = f.adjacency
    deg = f.degrees
    order: list[int] = []
    placed: set[int] = set()
    remaining = {v for v in range(f.n) if deg[v]}
    while remaining:
        v = min(remaining, key=lambda x: (-len(adj[x] & placed), -deg[x], x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order + [v for v in range(f.n) if not deg[v]]


def _pair_edges(host: UniformHypergraph) -> dict[tuple[int, int], list[Edge]]:
    out: dict[tuple[int, int], list[Edge]] = {}
    for e in host.edges:
        for p in combinations(e, 2):
            out.setdefault(p, []).append(e)
    return out


def _assign(f_edges, phi, pair_edges, image: set[int]):
    """Pick pairwise extension-disjoint hyperedges for the core edges."""
    cands = []
    for a, b in f_edges:
        x, y = sorted((phi[a], phi[b]))
        opts = [he for he in pair_edges.get((x, y), ()) if not (set(he) - {x, y}) & image]
        if not opts:
            return None
        cands.append(((a, b), (x, y), opts))
    cands.sort(key=lambda c: len(c[2]))
    chosen: dict[tuple[int, int], Edge] = {}
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(cands):
            return True
        edge, pair, opts = cands[i]
        for he in opts:
            ext = set(he) - set(pair)
            if ext & used:
                continue
            chosen[edge] = he
            used.update(ext)
            if rec(i + 1):
                return True
            used.difference_update(ext)
            del chosen[edge]
        return False

    return chosen if rec(0) else None


def contains_expansion(host: UniformHypergraph, f: Graph, r: int) -> ExpansionWitness | None:
    """A witness that ``host`` contains F^(r)+, or None.

    Core vertices are embedded first, constrained to host 2-shadow pairs;
    once the whole core is placed the hyperedges are assigned by a second
    backtracking search.
    """
    require_graph(f, "core")
    if host.r != r:
        raise UniformityMismatch(f"host has r = {host.r}, expected {r}")
    if f.n + (r - 2) * len(f.edges) > host.n or len(f.edges) > len(host.edges):
        return None
    pair_edges = _pair_edges(host)
    adj = host.adjacency
    order = _core_order(f)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in f.adjacency[v] if pos[w] < pos[v]] for v in order]
    fdeg = f.degrees
    # per-vertex edges whose second endpoint is placed at that step
    phi: dict[int, int] = {}
    used: set[int] = set()
    result: list[ExpansionWitness] = []

    def rec(i: int) -> bool:
        if i == len(order):
            got = _assign(f.edges, phi, pair_edges, used)
            if got is None:
                return False
            result.append(ExpansionWitness(dict(sorted(phi.items())), dict(sorted(got.items()))))
            return True
        v = order[i]
        if back[i]:
            cands = sorted(frozenset.intersection(*(adj[phi[w]] for w in back[i])))
        else:
            cands = range(host.n)
        for x in cands:
            if x in used or len(adj[x]) < fdeg[v]:
                continue
            phi[v] = x
            used.add(x)
            if rec(i + 1):
                return True
            used.discard(x)
            del phi[v]
        return False

    rec(0)
    return result[0] if result else None


def is_expansion_free(host: UniformHypergraph, f: Graph, r: int) -> bool:
    return contains_expansion(host, f, r) is None


def greedy_extend(
    host: UniformHypergraph, partial: ExpansionWitness, f: Graph, t: int
) -> ExpansionWitness:
    """Complete ``partial`` to a full witness using t-fat pairs.

    ``partial.core_map`` places all of F; ``partial.edge_assignment`` covers
    a subgraph F_0. Each remaining core edge must map to a t-fat pair, with
    t >= (r-2)|E(F)| + |V(F)|. Fewer than t vertices are ever in use and each
    meets at most one of the t hyperedges of a fat family, so some member of
    the family is always free.
    """
    require_graph(f, "core")
    r = host.r
    need = default_t(f, r)
    if t < need:
        raise PreconditionViolated(f"t = {t} is below (r-2)|E(F)|+|V(F)| = {need}")
    if sorted(partial.core_map) != list(range(f.n)):
        raise PreconditionViolated("core_map must place every vertex of F")
    phi = partial.core_map
    done = dict(partial.edge_assignment)
    remaining = [e for e in f.edges if e not in done]
    families = {}
    for a, b in remaining:
        fam = fat_family(host, (phi[a], phi[b]), t)
        if fam is None:
            raise PreconditionViolated(f"pair {(phi[a], phi[b])} for core edge {(a, b)} is not {t}-fat")
        families[(a, b)] = fam
    used = set(phi.values())
    for e, he in done.items():
        used |= set(he)
    for a, b in remaining:
        pair = {phi[a], phi[b]}
        pick = next((he for he in families[(a, b)] if not (set(he) - pair) & used), None)
        if pick is None:
            raise RuntimeError("fat family exhausted; vertex accounting is broken")
        done[(a, b)] = pick
        used |= set(pick)
    return ExpansionWitness(dict(phi), dict(sorted(done.items())))
