"""Exact canonical forms and generic sub-hypergraph containment.

The canonical labelling is the lexicographically smallest relabelled edge
list over all leaves of an individualisation/refinement tree. Cells are
split by an isomorphism-invariant signature, so the minimum ranges over a
set of labellings that is mapped onto itself by every isomorphism, which
makes the key exact. Branches are pruned only through vertex pairs whose
transposition is an automorphism.
"""

from __future__ import annotations

from .errors import TooLarge, UniformityMismatch
from .hypergraph import UniformHypergraph

DEFAULT_MAX_N = 12

CanonicalForm = bytes


def _refine(h: UniformHypergraph, cells: list[list[int]]) -> list[list[int]]:
    inc = h.incidence
    while True:
        cell_of = [0] * h.n
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {}
            for v in c:
                sig[v] = tuple(sorted(tuple(sorted(cell_of[w] for w in e if w != v)) for e in inc[v]))
            order = sorted(set(sig.values()))
            if len(order) == 1:
                new.append(c)
                continue
            changed = True
            for s in order:
                new.append([v for v in c if sig[v] == s])
        cells = new
        if not changed:
            return cells


def _twin_classes(h: UniformHypergraph) -> list[int]:
    """Class id per vertex; same id iff swapping the two vertices is an automorphism."""
    edges = h.edge_set
    inc = h.incidence
    cls = list(range(h.n))
    for x in range(h.n):
        if cls[x] != x:
            continue
        for y in range(x + 1, h.n):
            if cls[y] != y or h.degrees[x] != h.degrees[y]:
                continue
            swap = {x: y, y: x}
            if all(
                tuple(sorted(swap.get(w, w) for w in e)) in edges
                for e in inc[x]
                if y not in e
            ):
                cls[y] = x
    return cls


def canonical_labeling(h: UniformHypergraph, max_n: int = DEFAULT_MAX_N) -> tuple[tuple, list[int]]:
    """Return (canonical edge tuple, labelling) with ``h.relabel(labelling)``
    having exactly the canonical edge tuple."""
    if h.n > max_n:
        raise TooLarge(f"canonical form limited to n <= {max_n}, got n = {h.n}")
    if h.n == 0:
        return (), []
    twins = _twin_classes(h)
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(h, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            label = [0] * h.n
            for i, c in enumerate(cells):
                label[c[0]] = i
            key = tuple(sorted(tuple(sorted(label[v] for v in e)) for e in h.edges))
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, label
            return
        cell = cells[target]
        tried = set()
        for v in cell:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(h.n))])
    return best[0], best[1]


def encode_key(n: int, r: int, edges: tuple) -> CanonicalForm:
    return bytes([n, r]) + bytes(v for e in edges for v in e)


def canonical_form(h: UniformHypergraph, max_n: int = DEFAULT_MAX_N) -> CanonicalForm:
    """Byte key; equal keys iff the hypergraphs are isomorphic."""
    edges, _ = canonical_labeling(h, max_n)
    return encode_key(h.n, h.r, edges)


def canonical_hypergraph(h: UniformHypergraph, max_n: int = DEFAULT_MAX_N) -> UniformHypergraph:
    edges, _ = canonical_labeling(h, max_n)
    return UniformHypergraph(h.n, h.r, edges)


def from_key(key: CanonicalForm) -> UniformHypergraph:
    n, r = key[0], key[1]
    flat = key[2:]
    return UniformHypergraph(n, r, tuple(tuple(flat[i:i + r]) for i in range(0, len(flat), r)))


def is_isomorphic(a: UniformHypergraph, b: UniformHypergraph) -> bool:
    if (a.n, a.r, len(a.edges)) != (b.n, b.r, len(b.edges)):
        return False
    return canonical_form(a, max(a.n, DEFAULT_MAX_N)) == canonical_form(b, max(b.n, DEFAULT_MAX_N))


# containment ------------------------------------------------------------------

def _pattern_order(pattern: UniformHypergraph) -> list[int]:
    """Greedy order: stay connected to already placed vertices, prefer high degree."""
    deg = pattern.degrees
    adj = pattern.adjacency
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(pattern.n))
    while remaining:
        v = min(remaining, key=lambda x: (-len(adj[x] & placed), -deg[x], x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def find_embedding(host: UniformHypergraph, pattern: UniformHypergraph) -> dict[int, int] | None:
    """Injective vertex map sending every pattern edge onto a host edge, or None."""
    if host.r != pattern.r:
        raise UniformityMismatch(f"host r = {host.r} but pattern r = {pattern.r}")
    if pattern.n > host.n or len(pattern.edges) > len(host.edges):
        return None
    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # edges checked when their last vertex gets placed
    closing: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in pattern.edges:
        closing[max(pos[v] for v in e)].append(e)
    back_adj = [[w for w in pattern.adjacency[v] if pos[w] < pos[v]] for v in order]
    hdeg = host.degrees
    hadj = host.adjacency
    hedges = host.edge_set
    pdeg = pattern.degrees
    phi: dict[int, int] = {}
    used = [False] * host.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        if back_adj[i]:
            cands = set.intersection(*(set(hadj[phi[w]]) for w in back_adj[i]))
            cands = sorted(cands)
        else:
            cands = range(host.n)
        for x in cands:
            if used[x] or hdeg[x] < pdeg[v]:
                continue
            phi[v] = x
            if all(tuple(sorted(phi[w] for w in e)) in hedges for e in closing[i]):
                used[x] = True
                if rec(i + 1):
                    return True
                used[x] = False
            del phi[v]
        return False

    return dict(phi) if rec(0) else None


def contains_subhypergraph(host: UniformHypergraph, pattern: UniformHypergraph) -> bool:
    return find_embedding(host, pattern) is not None


def brute_force_isomorphic(a: UniformHypergraph, b: UniformHypergraph) -> bool:
    """Exhaustive isomorphism test over all bijections; small n only."""
    from itertools import permutations

    if (a.n, a.r, len(a.edges)) != (b.n, b.r, len(b.edges)):
        return False
    target = b.edge_set
    for perm in permutations(range(a.n)):
        if all(tuple(sorted(perm[v] for v in e)) in target for e in a.edges):
            return True
    return False

