import pytest
from hypothesis import strategies as st

import bisectlab as bl
from bisectlab.experiment import build_corpus_entry, default_corpus_specs
from bisectlab.generators import gadget_catalog, gadget_for_config


@pytest.fixture(scope="session")
def corpus():
    """The standing corpus as (graph_id, graph) pairs."""
    return [build_corpus_entry(spec) for spec in default_corpus_specs()]


@pytest.fixture(scope="session")
def gadgets():
    """(request, graph, qpm, edge) for every catalog entry."""
    out = []
    for req in gadget_catalog():
        g, q, edge = gadget_for_config(req)
        out.append((req, g, q, edge))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if possible:
        edges = draw(
            st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))
        )
    else:
        edges = []
    return bl.build_graph(n, edges)


@st.composite
def even_graphs_with_qpm(draw, max_n: int = 8):
    g = draw(graphs(min_n=2, max_n=max_n))
    if g.n % 2:
        g = bl.build_graph(g.n + 1, g.edges)
    q = bl.quasi_perfect_matching(g, seed=draw(st.integers(0, 2**32)), restarts=2)
    return g, q
