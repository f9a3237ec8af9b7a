import pytest

from ksgraceful import constructions as C
from ksgraceful.catalog import load_catalog
from ksgraceful.graph import Labeling, cycle_plus_path as cpp_graph, nk2, path, star, verify_labeling
from ksgraceful.skolem import k_skolem_length_2k_minus_1, skolem_to_nk2_labeling


def test_star_small_cases():
    g, lab = C.star_all_odd_edges(1)
    assert lab.vertex_labels == (3, 2) and lab.edge_labels == (1,)
    g, lab = C.star_all_odd_edges(3)
    assert lab.vertex_labels == (7, 6, 4, 2) and lab.edge_labels == (1, 3, 5)


@pytest.mark.parametrize("q", range(1, 41))
def test_star_all_edges_odd(q):
    g, lab = C.star_all_odd_edges(q)
    assert verify_labeling(g, lab) and all(e % 2 for e in lab.edge_labels)


def test_graceful_to_odd_super_examples():
    assert C.graceful_to_odd_super(path(2), (0, 1)).labeling.vertex_labels == (1, 3)
    lab = C.graceful_to_odd_super(path(4), (0, 3, 1, 2)).labeling
    assert lab.vertex_labels == (1, 7, 3, 5) and lab.edge_labels == (6, 4, 2)
    lab = C.graceful_to_odd_super(star(3), (0, 1, 2, 3)).labeling
    assert lab.vertex_labels == (1, 3, 5, 7) and lab.edge_labels == (2, 4, 6)
    with pytest.raises(C.ConstructionError):
        C.graceful_to_odd_super(path(3), (0, 1, 2))


def test_edge_interval_examples():
    lab = C.odd_super_to_edge_interval(path(2), Labeling(1, (1, 3), (2,))).labeling
    assert lab.vertex_labels == (2, 3) and lab.edge_labels == (1,)
    assert C.edge_interval_to_graceful(path(2), lab) == (0, 1)
    cat = load_catalog()
    e = cat["c4p3-odd"]
    mid = C.odd_super_to_edge_interval(e.graph, e.labeling)
    assert sorted(mid.labeling.edge_labels) == list(range(1, 7))


def test_edge_interval_to_graceful_on_p3():
    g = path(3)
    lab = Labeling.from_vertex_labels(g, 1, (3, 5, 4))
    assert sorted(lab.edge_labels) == [1, 2]
    gr = C.edge_interval_to_graceful(g, lab)
    assert sorted(abs(gr[u] - gr[v]) for u, v in g.edges) == [1, 2]


def test_edge_interval_to_graceful_on_nk2():
    g, lab = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(1))
    gr = C.edge_interval_to_graceful(g, lab)
    assert sorted(abs(gr[u] - gr[v]) for u, v in g.edges) == list(range(1, g.q + 1))


@pytest.mark.parametrize("n,m", [(3, m) for m in range(4, 20)] + [(4, m) for m in range(3, 20)])
def test_transform_triangle(n, m):
    g, lab = C.cycle_plus_path(n, m)
    if g.p != g.q + 1:
        pytest.skip("not a (q+1,q)-graph")
    mid = C.odd_super_to_edge_interval(g, lab)
    back = C.graceful_to_odd_super(g, C.edge_interval_to_graceful(*mid))
    assert back.labeling == lab


def test_extend_by_path_single_step_on_k2():
    g = path(2)
    lab = Labeling(1, (3, 1), (2,))
    out = C.extend_by_path(g, lab, 1, 2)
    assert out.labeling.vertex_labels == (3, 5, 1)
    assert out.labeling.edge_labels == (2, 4)


def test_extend_by_path_twice_equals_longer_path():
    g = path(3)
    lab = Labeling.from_vertex_labels(g, 1, (3, 5, 1))
    once = C.extend_by_path(g, lab, 2, 2)
    assert once.verify()
    twice = C.extend_by_path(once.graph, once.labeling, once.graph.p - 1, 2)
    direct = C.extend_by_path(g, lab, 2, 3)
    assert twice.graph.edges == direct.graph.edges and twice.labeling == direct.labeling


@pytest.mark.parametrize("n", range(2, 12))
def test_extend_cycle_plus_path_keeps_odd_labels(n):
    g, lab = C.cycle_plus_path(4, 3)
    v = lab.vertex_labels.index(1)
    out = C.extend_by_path(g, lab, v, n)
    assert out.verify() and all(x % 2 for x in out.labeling.vertex_labels)


def test_complement_reflection():
    g = path(3)
    lab = Labeling.from_vertex_labels(g, 1, (3, 5, 1))
    out = C.complement_labeling(g, lab)
    assert out.verify() and out.labeling.vertex_labels == (3, 1, 5)
    assert C.complement_labeling(g, out.labeling).labeling == lab


@pytest.mark.parametrize("key", ["c4p3-odd", "c3p6-odd", "c4p4-odd"])
def test_complement_constant(key):
    e = load_catalog()[key]
    # reflecting about 2q fails; 2q + 2 keeps the odd labels of [1, 2q+1]
    with pytest.raises(C.ConstructionError):
        C.complement_labeling(e.graph, e.labeling, reflect=2 * e.graph.q)
    out = C.complement_labeling(e.graph, e.labeling)
    assert out.verify()


def test_compose_examples():
    cat = load_catalog()
    a = C.compose_disjoint([(cat["example-k2-edge1"].graph, cat["example-k2-edge1"].labeling),
                            (cat["example-4k2-k2"].graph, cat["example-4k2-k2"].labeling)])
    assert a.verify() and sorted(a.labeling.edge_labels) == [1, 2, 3, 4, 5]
    b = C.compose_disjoint([(cat["example-p3-edges12"].graph, cat["example-p3-edges12"].labeling),
                            (cat["example-5k2-k3"].graph, cat["example-5k2-k3"].labeling)])
    assert b.verify() and sorted(b.labeling.edge_labels) == list(range(1, 8))
    assert b.graph.p == 13 and b.graph.component_count == 6


def test_compose_single_part_is_identity():
    g, lab = C.star_all_odd_edges(4)
    out = C.compose_disjoint([(g, lab)])
    assert out.labeling == lab


def test_compose_rejects_non_tiling_parts():
    g, lab = C.star_all_odd_edges(2)
    with pytest.raises(C.ConstructionError):
        C.compose_disjoint([(g, lab), (g, lab)])


def test_compose_chain_mode():
    g = path(2)
    a = Labeling(1, (3, 2), (1,))
    b = Labeling(4, (6, 5), (1,))
    with pytest.raises(C.ConstructionError):
        # the second part is not a valid 4-super graceful labeling
        C.compose_disjoint([(g, a), (g, b)], mode="chain")


def test_even_edge_fixtures():
    assert C.nk2_even_edges(4).labeling.vertex_labels == (5, 7, 3, 9, 1, 11, 8, 12)
    assert sorted(C.nk2_even_edges(5).labeling.edge_labels) == [2, 4, 6, 10, 14]
    assert sorted(C.nk2_even_edges(9).labeling.edge_labels) == [2, 4, 6, 8, 10, 12, 18, 20, 24]
    for n in (4, 5, 8, 9):
        assert all(e % 2 == 0 for e in C.nk2_even_edges(n).labeling.edge_labels)
    with pytest.raises(C.ConstructionError):
        C.nk2_even_edges(6)


@pytest.mark.parametrize("n,t", [(4, 1), (8, 2)])
def test_even_edges_extend(n, t):
    src = C.nk2_even_edges(n)
    out = C.even_edges_extend(*src)
    assert out.verify() and out.graph.q == n + 1
    assert all(e % 2 == 0 for e in out.labeling.edge_labels)
    assert out.labeling.max_label == 12 * t + 3


def test_cycle_plus_path_printed_cases():
    g, lab = C.cycle_plus_path(4, 3)
    assert lab.vertex_labels == (1, 11, 5, 13, 3, 7, 9)
    g, lab = C.cycle_plus_path(3, 6)
    assert lab.vertex_labels == (5, 7, 11, 9, 17, 1, 15, 3, 13)
    assert g.edges == cpp_graph(3, 6).edges


@pytest.mark.parametrize("n,m", [(3, m) for m in range(4, 51)] + [(4, m) for m in range(3, 51)])
def test_cycle_plus_path_sweep(n, m):
    g, lab = C.cycle_plus_path(n, m)
    assert verify_labeling(g, lab) and all(x % 2 for x in lab.vertex_labels)


def test_cycle_plus_path_range():
    with pytest.raises(C.ConstructionError):
        C.cycle_plus_path(3, 3)
    with pytest.raises(C.ConstructionError):
        C.cycle_plus_path(5, 4)


def test_two_paths_k2_small():
    g, lab = C.two_paths_k2(2, 2)
    assert sorted(lab.vertex_labels) == [6, 7, 8, 9, 10, 11]
    assert sorted(lab.edge_labels) == [2, 3, 4, 5]
    # q edges starting at 2 end at q + 1: P5+P3 has 6 edges, P5+P2 has 5
    assert sorted(C.two_paths_k2(3, 2).labeling.edge_labels) == list(range(2, 8))
    assert sorted(C.two_paths_k2(2, 3).labeling.edge_labels) == list(range(2, 7))


def test_two_paths_kn1_small():
    lab = C.two_paths_kn1(2, 2).labeling
    assert lab.k == 3 and sorted(lab.edge_labels) == [6, 7, 8, 9]
    assert sorted(C.two_paths_kn1(4, 2).labeling.edge_labels) == list(range(10, 18))
    assert sorted(C.two_paths_kn1(2, 3).labeling.edge_labels) == list(range(7, 12))


@pytest.mark.parametrize("n", range(2, 51))
@pytest.mark.parametrize("r", [2, 3])
def test_two_path_sweeps(n, r):
    g, lab = C.two_paths_k2(n, r)
    assert verify_labeling(g, lab) and sorted(lab.edge_labels) == list(range(2, 2 * n + r))
    g, lab = C.two_paths_kn1(n, r)
    want = range(2 * n + 2, 4 * n + 2) if r == 2 else range(2 * n + 3, 4 * n + 4)
    assert verify_labeling(g, lab) and lab.k == n + 1 and sorted(lab.edge_labels) == list(want)


def test_bipartite_growth_examples():
    assert C.bipartite_growth("A1", 1, 2, 1).verify()
    out = C.bipartite_growth("A2", 2, 2, 3, 1)
    assert out.verify() and out.labeling.k == 3
    with pytest.raises(C.ConstructionError):
        C.bipartite_growth("A1", 1, 1, 1)
    with pytest.raises(C.ConstructionError):
        C.bipartite_growth("A2", 2, 4, 3)


def test_bipartite_growth_sweep():
    for n in range(1, 6):
        for k in range(1, 6):
            for rounds in range(0, 3):
                for d in range(k + 1, k + 4):
                    assert C.bipartite_growth("A1", n, d, k, rounds).verify()
                for d in range(2, k + 1):
                    assert C.bipartite_growth("A2", n, d, k, rounds).verify()


def test_literal_a2_round_labels_fail():
    with pytest.raises(C.ConstructionError):
        C.bipartite_growth("A2", 3, 2, 2, 1, printed_rounds=True)
    # the two agree when n = rounds + 1
    a = C.bipartite_growth("A2", 2, 2, 3, 1, printed_rounds=True)
    b = C.bipartite_growth("A2", 2, 2, 3, 1)
    assert a.labeling == b.labeling


def test_sequentially_additive_k2():
    g = path(2)
    add = C.nk2_to_sequentially_additive(g, Labeling(1, (3, 2), (1,)))
    assert sorted(add.vertex_labels) == [1, 2] and add.edge_labels == (3,)
    assert add.is_valid(g)


@pytest.mark.parametrize("k", range(1, 8))
def test_sequentially_additive_round_trip(k):
    g, lab = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(k))
    add = C.nk2_to_sequentially_additive(g, lab)
    if k == 2:
        assert sorted(add.edge_labels) == [8, 9, 10]
    assert sorted(add.edge_labels) == list(range(5 * k - 2, 7 * k - 3))
    assert C.sequentially_additive_to_nk2(g, add).labeling == lab
    # without the swap record the inverse still yields a valid labeling
    bare = C.AdditiveAssignment(add.k, add.vertex_labels, add.edge_labels)
    assert C.sequentially_additive_to_nk2(g, bare).verify()


def test_additive_requires_nk2():
    with pytest.raises(C.ConstructionError):
        C.nk2_to_sequentially_additive(path(3), Labeling.from_vertex_labels(path(3), 1, (3, 5, 4)))


def test_construct_dispatch():
    assert C.construct("nk2_two_skolem", 7).verify()
    assert C.construct("nk2_skolem", 8).verify()
    with pytest.raises(C.ConstructionError):
        C.construct("nk2_skolem", 6)
    with pytest.raises(C.ConstructionError):
        C.construct("unknown")
    with pytest.raises(C.ConstructionError):
        C.construct("two_paths_k2", 2)
