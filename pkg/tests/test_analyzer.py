from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bisectlab as bl
from bisectlab import generators as gen
from bisectlab.analyzer import DomainError, case_for_k, power_lower
from bisectlab.generators import GadgetRequest, gadget_for_config
from bisectlab.matching import M1
from conftest import even_graphs_with_qpm


def test_edge_partition_c8():
    c8 = gen.cycle(8)
    q = bl.make_qpm([(0, 1, M1), (2, 3, M1), (4, 5, M1), (6, 7, M1)])
    part = bl.edge_partition(c8, q)
    assert len(part.matching_edges) == 4
    assert len(part.e1) == 4 and not part.e2
    assert not part.violations


def test_edge_partition_quasi_triangle():
    g = bl.build_graph(4, [(0, 1), (2, 3), (1, 2), (1, 3)])
    q = bl.make_qpm([(0, 1, M1), (2, 3, M1)])
    part = bl.edge_partition(g, q)
    assert sorted(part.e2) == [(1, 2), (1, 3)]
    assert len(part.quasi_triangles) == 1
    assert part.k_counts == [2, 2]
    assert sum(part.k_counts) == 2 * len(part.e2)


def test_edge_partition_disjoint_matchings():
    g = bl.build_graph(4, [(0, 1), (2, 3)])
    part = bl.edge_partition(g, bl.make_qpm([(0, 1, M1), (2, 3, M1)]))
    assert len(part.matching_edges) == 2 and not part.e1 and not part.e2


def test_edge_partition_flags_triple_connections():
    g = bl.build_graph(4, [(0, 1), (2, 3), (1, 2), (1, 3), (0, 2)])
    part = bl.edge_partition(g, bl.make_qpm([(0, 1, M1), (2, 3, M1)]))
    assert part.violations


def test_special_path_p4():
    p4 = gen.path_graph(4)
    q = bl.make_qpm([(0, 1, M1), (2, 3, M1)])
    sp = bl.special_path(p4, q, (1, 2))
    assert sp.k == (0, 0, 0, 0, 0, 0)
    assert (sp.s1, sp.s2) == (0, 0)
    assert sp.case_id == 4 and not sp.flags
    assert not bl.check_propositions(sp)


def test_special_path_k3_gadget():
    g, q, edge = gadget_for_config(GadgetRequest(k3=1))
    sp = bl.special_path(g, q, edge)
    assert sp.k == (0, 0, 1, 0, 0, 0)
    assert len(sp.type_members["S3"]) == 1


def test_special_path_k1_gadget_is_matching_bridge():
    g, q, edge = gadget_for_config(GadgetRequest(k1=1))
    sp = bl.special_path(g, q, edge)
    assert sp.k[0] == 1 and sp.k_sub["k11"] == 1


def test_special_path_rejects_bad_edges():
    g = bl.build_graph(4, [(0, 1), (2, 3), (1, 2), (1, 3)])
    q = bl.make_qpm([(0, 1, M1), (2, 3, M1)])
    with pytest.raises(DomainError):
        bl.special_path(g, q, (0, 1))  # a matching pair
    with pytest.raises(DomainError):
        bl.special_path(g, q, (1, 2))  # one of two connecting edges


def test_st_values_all_zero():
    assert bl.st_values((0,) * 6, (0,) * 6, (0, 1)) == (-1, -1)
    assert bl.st_values((0,) * 6, (0,) * 6, (0, 0)) == (1, 1)


def test_st_values_case4_row():
    # with every channel empty the unequal conditioning gives (t, t) = (-1, -1)
    t1, t2 = bl.st_values((0,) * 6, (0,) * 6, (0, 1))
    assert t1 == t2 == -1


@given(
    st.tuples(
        st.integers(0, 1), st.integers(0, 2), st.integers(0, 1),
        st.integers(0, 1), st.integers(0, 1), st.integers(0, 3),
    ),
    st.data(),
)
def test_st_values_relations(k, data):
    counts = tuple(data.draw(st.integers(0, cap)) for cap in k)
    a, b, c, d, e, f = counts
    t1, t2 = bl.st_values(k, counts, (0, 1))
    t1e, t2e = bl.st_values(k, counts, (0, 0))
    alpha = a + b + c - d
    delta = k[0] + k[1] + k[2] - k[3]
    assert t2 == t1 - 4 * alpha + 2 * delta
    assert t1e == t1 + 2
    assert t2e == -t2
    assert bl.st_values(k, counts, (1, 0)) == (t1, t2)
    assert bl.st_values(k, counts, (1, 1)) == (t1e, t2e)


def test_st_values_rejects_out_of_range():
    with pytest.raises(DomainError):
        bl.st_values((0,) * 6, (1, 0, 0, 0, 0, 0), (0, 1))


def test_case_for_k():
    assert case_for_k((0, 0, 0, 1, 0, 0)).case_id == 1
    assert case_for_k((1, 0, 0, 0, 0, 0)).case_id == 2
    assert case_for_k((1, 1, 0, 0, 1, 2)).case_id == 3
    assert case_for_k((0, 0, 0, 0, 0, 3)).case_id == 4
    assert case_for_k((0, 1, 0, 1, 0, 0)).case_id == 4
    with pytest.raises(DomainError):
        case_for_k((1, 2, 1, 0, 0, 0))  # sum 4
    with pytest.raises(DomainError):
        case_for_k((1, 0, 0, 2, 0, 0))  # k4 out of range
    with pytest.raises(DomainError):
        case_for_k((1, 0, 0, 1, 0, 0))  # bridge pair with a u'v' common neighbor
    with pytest.raises(DomainError):
        case_for_k((1, 1, 0, 1, 0, 0))  # case 2 needs k4 = 0


def _valid_k_vectors():
    for k in product(range(2), range(3), range(2), range(2), range(2), range(3)):
        try:
            yield case_for_k(k)
        except DomainError:
            continue


def test_closed_form_equals_generic_enumeration_everywhere():
    for cfg in _valid_k_vectors():
        for s1, s2 in ((0, 0), (1, 2), (3, 3)):
            table = bl.pij_closed_form(cfg, s1, s2)
            generic = bl.pij_by_enumeration(cfg.k, s1, s2)
            assert table == generic, (cfg, s1, s2)


def test_pij_probability_range_and_symmetry():
    for cfg in _valid_k_vectors():
        table = bl.pij_closed_form(cfg, 2, 1)
        for p in (table.p00, table.p01, table.p10, table.p11):
            assert 0 <= p <= 1
        assert table.p01 == table.p10 and table.p00 == table.p11


def test_pij_p4_values():
    table = bl.pij_closed_form(case_for_k((0,) * 6), 0, 0)
    assert table.p01 == 1 and table.p00 == 0


def test_pij_rejects_inconsistent_case():
    from bisectlab.analyzer import CaseConfig

    with pytest.raises(DomainError):
        bl.pij_closed_form(CaseConfig(2, (0, 0, 0, 1, 0, 0)), 1, 1)


def test_cut_probability_closed_form_p4():
    p4 = gen.path_graph(4)
    q = bl.make_qpm([(0, 1, M1), (2, 3, M1)])
    sp = bl.special_path(p4, q, (1, 2))
    assert bl.cut_probability_closed_form(sp) == Fraction(3, 4)


def test_cut_probability_at_least_half_over_valid_configs():
    half = Fraction(1, 2)
    for cfg in _valid_k_vectors():
        for s1, s2 in ((0, 0), (0, 3), (2, 2), (4, 1)):
            assert bl.pij_closed_form(cfg, s1, s2).cut_probability() >= half


@settings(max_examples=40, deadline=None)
@given(even_graphs_with_qpm(max_n=8), st.integers(0, 2**32))
def test_sigma_trimming_is_sound(gq, seed):
    g, q = gq
    labels = bl.stage1(q, seed)
    for u, v, _ in q.pairs:
        assert bl.sigma(g, q, labels, (u, v)) == bl.sigma_trimmed(g, q, labels, (u, v))


def test_sigma_trimming_sound_on_100_free_instances(gadgets):
    def check(g, q, seeds=3):
        for s in range(seeds):
            labels = bl.stage1(q, seed=s)
            for u, v, _ in q.pairs:
                assert bl.sigma(g, q, labels, (u, v)) == bl.sigma_trimmed(
                    g, q, labels, (u, v)
                )

    for _req, g, q, _edge in gadgets:
        check(g, q)
    built = 0
    seed = 0
    while built < 100:
        seed += 1
        try:
            g = gen.random_free_graph(10 + seed % 9, 14 + seed % 7, seed=seed)
        except gen.GenerationError:
            continue
        if g.n % 2:
            g = bl.build_graph(g.n + 1, g.edges)
        check(g, bl.quasi_perfect_matching(g, seed=seed, restarts=2))
        built += 1


def test_bounds_worked_examples():
    c8 = gen.cycle(8)
    assert bl.hou_yan_bound(c8) == Fraction(23, 4)
    shearer = bl.shearer_bisection_bound(c8, Fraction(1, 32))
    assert abs(float(shearer) - (4 + 8 * 2 ** 0.5 / 32)) < 1e-8

    t2 = bl.power_law_bound(100, 3, Fraction(1))
    assert abs(float(t2) - (50 + 100 ** (7 / 8))) < 1e-6


def test_bound_domain_errors():
    with pytest.raises(DomainError):
        bl.shearer_bisection_bound(gen.cycle(8), Fraction(0))
    with pytest.raises(DomainError):
        bl.power_law_bound(10, 0, Fraction(1))


def test_power_lower_brackets_from_below():
    val = power_lower(2, 1, 2, digits=9)
    assert val * val <= 2 < (val + Fraction(1, 10**9)) ** 2


def test_degeneracy_chain_c8():
    report = bl.degeneracy_chain_check(gen.cycle(8), k=3)
    assert report.ok and report.witness_cycle is None
    assert report.sum_sqrt_deg >= report.sum_sqrt_back >= report.rhs - Fraction(1, 10**9)


def test_degeneracy_chain_rejects_c6():
    report = bl.degeneracy_chain_check(gen.cycle(6), k=3)
    assert not report.ok and len(report.witness_cycle) == 6


def test_degeneracy_chain_regular_graph():
    # 3-regular: sum sqrt(d) = n sqrt(3) and m/sqrt(D) with D <= 4
    report = bl.degeneracy_chain_check(gen.tutte_coxeter(), k=3)
    assert report.ok


def test_analyze_graph_report_shape(corpus):
    graph_id, g = corpus[0]
    q = bl.quasi_perfect_matching(g, seed=0)
    report = bl.analyze_graph(g, q)
    data = report.to_json()
    assert set(data) == {"edge_partition_summary", "special_paths", "violations"}
    for entry in data["special_paths"]:
        assert set(entry) >= {"edge", "k", "s1", "s2", "case"}
        if "p_cut" in entry:
            assert Fraction(entry["p_cut"]) >= Fraction(1, 2)
