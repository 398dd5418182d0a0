import random
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from hyperturan.hypergraph import UniformHypergraph

# searches have heavy-tailed run times; only correctness is checked here
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")


@st.composite
def hypergraphs(draw, max_n=7, rs=(2, 3), max_edges=None):
    r = draw(st.sampled_from(rs))
    n = draw(st.integers(min_value=r, max_value=max_n))
    slots = list(combinations(range(n), r))
    picked = draw(st.lists(st.sampled_from(slots), unique=True, max_size=max_edges or len(slots)))
    return UniformHypergraph(n, r, tuple(sorted(picked)))


def graphs(max_n=7, max_edges=None):
    return hypergraphs(max_n=max_n, rs=(2,), max_edges=max_edges)


def random_hypergraph(n, r, p, rng):
    return UniformHypergraph(n, r, tuple(e for e in combinations(range(n), r) if rng.random() < p))


@pytest.fixture
def rng():
    return random.Random(12345)
