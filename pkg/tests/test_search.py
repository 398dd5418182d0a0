from math import comb

import pytest

from hyperturan.chromatic import decomposition_family
from hyperturan.constructions import book_graph, turan_graph
from hyperturan.errors import HypergraphError, SeedNotFree
from hyperturan.expansion import expand, is_expansion_free
from hyperturan.hypergraph import (
    complete_graph,
    complete_hypergraph,
    empty_hypergraph,
    path_graph,
    star_graph,
)
from hyperturan.operators import clique_expansion, count_cliques
from hyperturan.search import (
    Budget,
    Forbidden,
    SearchProblem,
    ex_graph_cliques,
    ex_graph_edges,
    ex_hyper_cliques,
    ex_hypergraph,
    free_classes,
    gap_table,
    lower_bound_local_search,
    search,
)

K3, K4 = complete_graph(3), complete_graph(4)


def test_mantel_values():
    assert ex_graph_edges(5, [K3]).value == 6
    res = ex_graph_edges(6, [K3])
    assert res.value == 9 and res.exhaustive
    assert len(res.witness.edges) == 9 and is_expansion_free(res.witness, K3, 2)


def test_biex_book_via_search():
    fam = decomposition_family(book_graph(2))
    assert ex_graph_edges(6, list(fam.members)).value == 1


def test_zykov_values():
    assert ex_graph_cliques(6, 3, [K4]).value == 8
    assert ex_graph_cliques(7, 3, [K4]).value == count_cliques(turan_graph(7, 3), 3) == 12


def test_clique_objective_two_is_edges():
    for n in range(3, 7):
        assert ex_graph_cliques(n, 2, [K3]).value == ex_graph_edges(n, [K3]).value


def test_ex_hypergraph_values():
    assert ex_hypergraph(5, 3, K3).value == comb(5, 3)
    res = ex_hypergraph(6, 3, K3)
    # regression value from exhaustive search
    assert res.value == 10 and res.exhaustive
    assert is_expansion_free(res.witness, K3, 3)
    for n in range(4, 8):
        assert ex_hypergraph(n, 3, K4).value == comb(n, 3)


@pytest.mark.parametrize("core", [K3, path_graph(3), star_graph(2), star_graph(3)])
def test_branch_and_bound_agrees_with_orderly(core):
    for n in range(3, 7):
        a = ex_hypergraph(n, 3, core)
        b = ex_hypergraph(n, 3, core, method="branch")
        assert a.value == b.value and a.exhaustive and b.exhaustive
        assert is_expansion_free(b.witness, core, 3)


def test_unknown_method():
    with pytest.raises(HypergraphError):
        ex_hypergraph(4, 3, K3, method="magic")


def test_free_class_counts():
    # iso classes of 3-graphs on 6 vertices avoiding each expansion
    assert len(free_classes(SearchProblem(6, 3, (Forbidden("expansion", K3),)))[0]) == 103
    assert len(free_classes(SearchProblem(6, 3, (Forbidden("expansion", path_graph(3)),)))[0]) == 8
    assert len(free_classes(SearchProblem(4, 2, ()))[0]) == 11


def test_parallel_search_matches_sequential():
    seq = ex_hypergraph(6, 3, K3)
    par = ex_hypergraph(6, 3, K3, workers=2)
    assert seq.to_json(timing=False) == par.to_json(timing=False)


def test_budget_exhaustion_is_reported():
    res = ex_hypergraph(7, 3, K3, budget_nodes=50)
    assert not res.exhaustive
    assert is_expansion_free(res.witness, K3, 3)
    assert ex_hypergraph(7, 3, K3, budget_nodes=0).exhaustive is False


def test_search_is_deterministic():
    a = ex_graph_cliques(6, 3, [K4]).to_json(timing=False)
    b = ex_graph_cliques(6, 3, [K4]).to_json(timing=False)
    assert a == b


def test_hyper_cliques():
    res = ex_hyper_cliques(6, 3, 4, K3)
    assert res.exhaustive and res.value >= 0


def test_local_search_examples():
    k4 = complete_graph(4)
    seed = clique_expansion(turan_graph(10, 3), 3)
    problem = SearchProblem(10, 3, (Forbidden("expansion", k4),))
    res = lower_bound_local_search(problem, seed, restarts=1, steps=10)
    assert res.value >= len(seed.edges) and not res.exhaustive

    p6 = SearchProblem(6, 3, (Forbidden("expansion", K3),))
    res = lower_bound_local_search(p6, empty_hypergraph(6, 3), restarts=2, steps=200, rng_seed=5)
    assert res.value <= ex_hypergraph(6, 3, K3).value
    assert is_expansion_free(res.witness, K3, 3)

    assert lower_bound_local_search(p6, empty_hypergraph(6, 3), steps=0).witness == empty_hypergraph(6, 3)
    with pytest.raises(SeedNotFree):
        lower_bound_local_search(p6, expand(K3, 3), steps=1)


def test_local_search_deterministic():
    p = SearchProblem(7, 3, (Forbidden("expansion", K3),))
    a = lower_bound_local_search(p, empty_hypergraph(7, 3), 2, 100, rng_seed=3)
    b = lower_bound_local_search(p, empty_hypergraph(7, 3), 2, 100, rng_seed=3)
    assert a.witness == b.witness


def test_gap_table_rows():
    rows = gap_table(K3, 3, range(4, 7))
    assert [r["n"] for r in rows] == [4, 5, 6]
    assert all(r["exhaustive"] for r in rows)
    for r in rows:
        for col in ("lb_clique", "lb_fixed", "lb_turan_cone", "lb_hprime"):
            assert r[col] is None or r[col] <= r["value"]


def test_gap_table_star_omits_fixed_vertex():
    rows = gap_table(star_graph(2), 3, range(4, 6))
    assert all(r["lb_fixed"] is None for r in rows)


def test_subgraph_pattern_uniformity_checked():
    with pytest.raises(HypergraphError):
        SearchProblem(5, 3, (Forbidden("subgraph", K3),))


def test_complete_search_when_nothing_forbidden():
    res = search(SearchProblem(5, 3, (), budget=Budget(10**6, 60)))
    assert res.value == 10 and res.witness == complete_hypergraph(5, 3)
