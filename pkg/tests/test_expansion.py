import random
import pytest
from hypothesis import given, strategies as st

from hyperturan.canon import contains_subhypergraph
from hyperturan.constructions import book_graph, turan_graph
from hyperturan.errors import PreconditionViolated, UniformityMismatch
from hyperturan.expansion import (
    ExpansionWitness,
    check_witness,
    contains_expansion,
    default_t,
    expand,
    greedy_extend,
    is_expansion_free,
)
from hyperturan.hypergraph import (
    complete_graph,
    complete_hypergraph,
    empty_hypergraph,
    make_hypergraph,
    matching_graph,
    path_graph,
    star_graph,
)
from hyperturan.operators import clique_expansion

from conftest import graphs, random_hypergraph


def test_expand_numbering():
    e = expand(complete_graph(3), 3)
    assert e.n == 6 and e.edges == ((0, 1, 3), (0, 2, 4), (1, 2, 5))


@given(graphs(max_n=6))
def test_expand_r2_is_identity(f):
    assert expand(f, 2) == f


def test_expand_bowtie():
    e = expand(book_graph(2), 3)
    assert e.n == 11 and len(e.edges) == 6


@given(graphs(max_n=6), st.integers(2, 5))
def test_expand_shape(f, r):
    e = expand(f, r)
    assert e.n == f.n + (r - 2) * len(f.edges)
    assert len(e.edges) == len(f.edges)
    # extension vertices have degree one
    assert all(d == 1 for d in e.degrees[f.n:])


def test_default_t():
    assert default_t(complete_graph(3), 3) == 6
    assert default_t(complete_graph(4), 3) == 10
    assert default_t(book_graph(2), 2) == 5


def test_contains_expansion_examples():
    k3 = complete_graph(3)
    w = contains_expansion(complete_hypergraph(6, 3), k3, 3)
    assert w is not None and check_witness(complete_hypergraph(6, 3), k3, w)
    assert contains_expansion(complete_hypergraph(5, 3), k3, 3) is None
    copy = make_hypergraph(6, 3, [(0, 1, 3), (0, 2, 4), (1, 2, 5)])
    w = contains_expansion(copy, k3, 3)
    assert w is not None and set(w.core_map.values()) == {0, 1, 2}
    with pytest.raises(UniformityMismatch):
        contains_expansion(copy, k3, 4)


def test_is_expansion_free_examples():
    assert is_expansion_free(clique_expansion(turan_graph(9, 3), 3), complete_graph(4), 3)
    assert is_expansion_free(empty_hypergraph(8, 3), path_graph(3), 3)
    for f in (complete_graph(3), star_graph(3), matching_graph(2)):
        assert not is_expansion_free(expand(f, 3), f, 3)


def test_contains_expansion_matches_generic_search():
    rng = random.Random(99)
    for _ in range(200):
        r = rng.choice((3, 4))
        f = random_hypergraph(rng.randint(2, 4), 2, 0.6, rng)
        if not f.edges:
            continue
        h = random_hypergraph(rng.randint(r, 8), r, rng.choice((0.3, 0.6, 0.9)), rng)
        w = contains_expansion(h, f, r)
        assert (w is not None) == contains_subhypergraph(h, expand(f, r))
        if w is not None:
            assert check_witness(h, f, w)


def test_check_witness_rejects_shared_extension():
    k3 = complete_graph(3)
    host = complete_hypergraph(6, 3)
    bad = ExpansionWitness({0: 0, 1: 1, 2: 2}, {(0, 1): (0, 1, 3), (0, 2): (0, 2, 3), (1, 2): (1, 2, 5)})
    assert not check_witness(host, k3, bad)


def test_greedy_extend_full_partial_unchanged():
    k3 = complete_graph(3)
    host = expand(k3, 3)
    w = contains_expansion(host, k3, 3)
    assert greedy_extend(host, w, k3, 6) == w


def test_greedy_extend_completes_from_bare_core():
    k3 = complete_graph(3)
    host = complete_hypergraph(default_t(k3, 3) + 3, 3)
    partial = ExpansionWitness({0: 0, 1: 1, 2: 2}, {})
    w = greedy_extend(host, partial, k3, 6)
    assert check_witness(host, k3, w)


def test_greedy_extend_with_partial_assignment():
    k4 = complete_graph(4)
    host = complete_hypergraph(14, 3)
    partial = ExpansionWitness({0: 0, 1: 1, 2: 2, 3: 3}, {(0, 1): (0, 1, 13)})
    w = greedy_extend(host, partial, k4, 10)
    assert check_witness(host, k4, w) and w.edge_assignment[(0, 1)] == (0, 1, 13)


def test_greedy_extend_preconditions():
    k3 = complete_graph(3)
    host = make_hypergraph(9, 3, [(0, 1, 3), (0, 2, 4), (1, 2, 5)])
    with pytest.raises(PreconditionViolated):
        greedy_extend(host, ExpansionWitness({0: 0, 1: 1, 2: 2}), k3, 6)
    with pytest.raises(PreconditionViolated):
        greedy_extend(complete_hypergraph(9, 3), ExpansionWitness({0: 0, 1: 1, 2: 2}), k3, 5)
    with pytest.raises(PreconditionViolated):
        greedy_extend(complete_hypergraph(9, 3), ExpansionWitness({0: 0, 1: 1}), k3, 6)


def test_witness_json():
    w = contains_expansion(expand(path_graph(3), 3), path_graph(3), 3)
    data = w.to_json()
    assert set(data) == {"core_map", "edge_assignment"} and len(data["edge_assignment"]) == 2
