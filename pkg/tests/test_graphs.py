from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bisectlab as bl
from bisectlab import generators as gen
from conftest import graphs


def test_build_triangle():
    g = bl.build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert [g.degree(v) for v in range(3)] == [2, 2, 2]


def test_build_path():
    g = bl.build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.adj[1] == (0, 2)


def test_build_rejects_duplicates_loops_and_range():
    with pytest.raises(bl.GraphInputError):
        bl.build_graph(2, [(0, 1), (1, 0)])
    with pytest.raises(bl.GraphInputError):
        bl.build_graph(2, [(0, 0)])
    with pytest.raises(bl.GraphInputError):
        bl.build_graph(2, [(0, 2)])


def test_find_cycle_k4_has_c4():
    cycle = bl.find_cycle(gen.complete_graph(4), 4)
    assert cycle is not None and len(set(cycle)) == 4


def test_find_cycle_c8_has_only_c8():
    c8 = gen.cycle(8)
    assert bl.find_cycle(c8, 4) is None
    assert bl.find_cycle(c8, 6) is None
    assert bl.find_cycle(c8, 8) is not None


def test_find_cycle_tutte_coxeter_no_c6():
    # exhaustive search on the girth-8 cage
    tc = gen.tutte_coxeter()
    for ell in (3, 4, 5, 6, 7):
        assert bl.find_cycle(tc, ell) is None
    assert bl.find_cycle(tc, 8) is not None


def test_find_cycle_rejects_short_lengths():
    with pytest.raises(ValueError):
        bl.find_cycle(gen.cycle(3), 2)


@given(graphs(max_n=8), st.integers(3, 8))
def test_found_cycles_are_genuine(g, ell):
    cycle = bl.find_cycle(g, ell)
    if cycle is not None:
        assert len(cycle) == ell == len(set(cycle))
        for i in range(ell):
            assert g.has_edge(cycle[i], cycle[(i + 1) % ell])


def _has_spanning_cycle(g, vertices):
    first, *rest = vertices
    for perm in permutations(rest):
        order = (first, *perm)
        if all(g.has_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))):
            return True
    return False


def _free_by_brute_force(g, lengths):
    for ell in lengths:
        for subset in combinations(range(g.n), ell):
            if _has_spanning_cycle(g, subset):
                return False
    return True


def test_is_free_trivial_cases():
    assert bl.is_free(gen.cycle(8), (4, 6)) == (True, None)
    ok, witness = bl.is_free(gen.cycle(6), (4, 6))
    assert not ok and len(witness) == 6
    assert bl.is_free(gen.two_subdivision(gen.complete_graph(4)), (4, 6))[0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_is_free_matches_brute_force(g):
    expected = _free_by_brute_force(g, (4, 6))
    assert bl.is_free(g, (4, 6))[0] == expected


@pytest.mark.parametrize("seed", range(6))
def test_is_free_matches_brute_force_n12(seed):
    from bisectlab.rng import stream

    rnd = stream(31, seed)
    n = 12
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.25]
    g = bl.build_graph(n, edges)
    assert bl.is_free(g, (4, 6))[0] == _free_by_brute_force(g, (4, 6))


def test_degeneracy_small_families():
    tree = bl.build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert bl.degeneracy_ordering(tree).degeneracy == 1
    assert bl.degeneracy_ordering(gen.cycle(8)).degeneracy == 2
    assert bl.degeneracy_ordering(gen.complete_graph(4)).degeneracy == 3


@given(graphs(max_n=9))
def test_degeneracy_back_degrees_consistent(g):
    order = bl.degeneracy_ordering(g)
    assert sorted(order.order) == list(range(g.n))
    pos = {v: i for i, v in enumerate(order.order)}
    for i, v in enumerate(order.order):
        assert order.back_degrees[i] == sum(1 for w in g.adj[v] if pos[w] < pos[v])
    assert sum(order.back_degrees) == g.m


def _degeneracy_by_brute_force(g):
    # max over induced subgraphs of the minimum degree
    best = 0
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        inside = set(vs)
        best = max(best, min(sum(1 for w in g.adj[v] if w in inside) for v in vs))
    return best


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_degeneracy_matches_brute_force(g):
    assert bl.degeneracy_ordering(g).degeneracy == _degeneracy_by_brute_force(g)


def test_parity_augment_even_is_identity():
    c8 = gen.cycle(8)
    assert bl.parity_augment(c8) is c8


def test_parity_augment_c7_adjacent_attachment():
    aug = bl.parity_augment(gen.cycle(7))
    assert aug.n == 8
    assert bl.is_free(aug, (4, 6))[0]
    # the first-fit rule picks the adjacent pair (0, 1): new cycle lengths 3, 8
    assert aug.has_edge(0, 7) and aug.has_edge(1, 7)
    assert bl.find_cycle(aug, 3) is not None
    assert bl.find_cycle(aug, 5) is None
    assert bl.find_cycle(aug, 8) is not None


def test_parity_augment_c5_impossible():
    # every vertex pair of the 5-cycle has a connecting path of length 2 or 4
    with pytest.raises(bl.AugmentationError):
        bl.parity_augment(gen.cycle(5))


def test_components_and_degrees():
    c8 = gen.cycle(8)
    assert bl.connected_components(c8) == [list(range(8))]
    assert bl.min_degree(c8) == 2
    assert bl.degree_sequence(c8) == [2] * 8

    two_triangles = bl.build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert len(bl.connected_components(two_triangles)) == 2

    assert bl.min_degree(gen.star(3)) == 1


def test_parse_graph_round_trip():
    text = "3 3\n0 1\n1 2\n2 0"
    g = bl.parse_graph(text)
    assert g.m == 3
    assert bl.write_graph(bl.parse_graph(bl.write_graph(g))) == bl.write_graph(g)


def test_parse_graph_comments_ignored():
    g = bl.parse_graph("# corpus entry\n2 1\n# the only edge\n0 1\n")
    assert g.edges == ((0, 1),)


def test_parse_graph_errors_carry_line_numbers():
    with pytest.raises(bl.GraphFormatError):
        bl.parse_graph("3 1\n0 0")
    with pytest.raises(bl.GraphFormatError, match="line 1"):
        bl.parse_graph("nonsense header")
    with pytest.raises(bl.GraphFormatError, match="promises"):
        bl.parse_graph("3 2\n0 1")
    with pytest.raises(bl.GraphFormatError, match="line 2"):
        bl.parse_graph("2 1\n0 x")


@given(graphs(max_n=9))
def test_write_parse_identity(g):
    assert bl.parse_graph(bl.write_graph(g)) == g
