import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksgraceful.graph import (
    Graph, GraphError, Labeling, LabelingStructureError, complete_bipartite, cycle, disjoint_union,
    family_from_spec, graph_family, independence_number, is_independent, nk2, parse_family, path, star,
    verify_labeling,
)
from ksgraceful.oracles import brute_force_alpha


def kinds(res):
    return {v.kind for v in res.violations}


def test_k2_super_graceful():
    g = path(2)
    assert verify_labeling(g, Labeling(1, (3, 2), (1,)))


def test_wrong_edge_difference_is_reported():
    g = path(2)
    res = verify_labeling(g, Labeling(1, (3, 1), (1,)))
    assert not res
    assert "difference" in kinds(res)


def test_repeat_and_missing_labels():
    g = cycle(3)
    # C3 with vertices 1,2,3 gives edges 1,1,2: repeats and misses labels
    res = verify_labeling(g, Labeling.from_vertex_labels(g, 1, (1, 2, 3)))
    assert {"repeat", "missing"} <= kinds(res)


def test_label_out_of_range():
    g = path(2)
    res = verify_labeling(g, Labeling(1, (5, 4), (1,)))
    assert "range" in kinds(res)


def test_offset_shifted_c10_is_invalid_at_other_k():
    labels = [24, 6, 20, 12, 21, 10, 23, 7, 22, 5]
    g = cycle(10)
    assert verify_labeling(g, Labeling.from_vertex_labels(g, 5, labels))
    assert not verify_labeling(g, Labeling.from_vertex_labels(g, 4, labels))


def test_structural_errors_raise():
    g = path(3)
    with pytest.raises(LabelingStructureError):
        verify_labeling(g, Labeling(1, (1, 2), (1, 1)))
    with pytest.raises(LabelingStructureError):
        verify_labeling(g, Labeling(1, (1, None, 3), (1, 1)))


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1),))


def test_families_and_shorthand():
    assert parse_family("5K2") == ("nK2", (5,))
    assert parse_family("2C3") == ("nCm", (2, 3))
    assert parse_family("C4+P3") == ("cycle_plus_path", (4, 3))
    assert parse_family("K(3,4)") == ("complete_bipartite", (3, 4))
    assert parse_family("K(1,5)") == ("star", (5,))
    assert parse_family("path:4") == ("path", (4,))
    g = family_from_spec("K(1,1,2)")
    assert (g.p, g.q) == (4, 5)
    assert graph_family("cycle_plus_path", 3, 4).edges[:3] == ((0, 1), (1, 2), (2, 0))
    with pytest.raises(GraphError):
        graph_family("nope", 1)
    with pytest.raises(GraphError):
        family_from_spec("Q7")


def test_disjoint_union_offsets():
    g = disjoint_union(path(3), nk2(2))
    assert g.p == 7 and g.edges == ((0, 1), (1, 2), (3, 4), (5, 6))
    assert g.component_count == 3


@pytest.mark.parametrize("g, alpha", [
    (nk2(5), 5), (cycle(5), 2), (cycle(6), 3), (complete_bipartite(3, 5), 5), (star(4), 4),
    (family_from_spec("K(1,1,2)"), 2), (family_from_spec("2C3"), 2),
])
def test_independence_known(g, alpha):
    cert = independence_number(g)
    assert cert.alpha == alpha
    assert len(cert.witness) == alpha and is_independent(g, cert.witness)


@st.composite
def random_graphs(draw):
    p = draw(st.integers(2, 9))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    touched = {x for e in chosen for x in e}
    extra = [(v, (v + 1) % p if (v + 1) % p != v else 0) for v in range(p) if v not in touched]
    edges = set(tuple(sorted(e)) for e in chosen + extra)
    return Graph(p, tuple(sorted(edges)))


@given(random_graphs())
def test_independence_matches_brute_force(g):
    cert = independence_number(g)
    assert cert.alpha == brute_force_alpha(g)
    assert is_independent(g, cert.witness)


@given(st.permutations(list(range(1, 8))))
def test_verifier_accepts_exactly_bijective_difference_labelings(perm):
    # P4 has p+q = 7; a vertex labeling is valid iff all 7 labels are distinct in [1, 7]
    g = path(4)
    lab = Labeling.from_vertex_labels(g, 1, perm[:4])
    labels = list(lab.vertex_labels) + list(lab.edge_labels)
    assert bool(verify_labeling(g, lab)) == (sorted(labels) == list(range(1, 8)))
