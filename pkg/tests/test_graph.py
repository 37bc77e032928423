"""The graph corresponding to a system: vertices, edges, labels, unions."""
from fractions import Fraction

import pytest

from fuzzybisim import ModelError, Nflts, Nfts, as_nflts, disjoint_union, to_flg
from fuzzybisim.graph import EPSILON, STATE_MARK, dist_vertex, state_vertex

from conftest import make_example

H = Fraction(1, 2)


def test_example_graph_shape():
    g = to_flg(make_example())
    assert len(g.vertices) == 8          # 5 states + 3 distinct distributions
    assert len(g.edges) == 12            # 6 action edges + 6 epsilon edges


def test_example_edge_degrees():
    g = to_flg(make_example())
    mu1 = dist_vertex(0)
    assert g.edge_degree(state_vertex("s1"), "a", mu1) == 1
    assert g.edge_degree(mu1, EPSILON, state_vertex("s3")) == Fraction("0.8")
    assert g.edge_degree(mu1, EPSILON, state_vertex("s1")) == 0


def test_state_vertices_are_marked():
    g = to_flg(make_example())
    for v in g.vertices:
        assert g.labels[v](STATE_MARK) == (1 if v.is_state else 0)


def test_degree_pool_sorted_distinct():
    g = to_flg(make_example())
    pool = g.degree_pool()
    assert pool == sorted(set(pool))
    assert Fraction("0.4") in pool and Fraction(1) in pool


def test_reserved_edge_symbol_rejected():
    with pytest.raises(ModelError):
        to_flg(Nfts(["s"], [EPSILON], []))


def test_reserved_vertex_symbol_rejected():
    with pytest.raises(ModelError):
        to_flg(Nflts(["s"], ["a"], [], [STATE_MARK], {}))


def test_labeled_graph_carries_state_labels():
    model = Nflts(["s", "t"], ["a"], [], ["p"], {"s": {"p": H}})
    g = to_flg(model)
    assert g.labels[state_vertex("s")]("p") == H
    assert g.labels[state_vertex("t")]("p") == 0
    assert g.vertex_alphabet == {"p", STATE_MARK}


def test_adjacency_is_consistent():
    g = to_flg(make_example())
    for (x, r, y), d in g.edges.items():
        assert (r, y, d) in g.out_edges(x)
        assert (r, x, d) in g.in_edges(y)
        assert x in g.predecessors(y)


def test_as_nflts_preserves_structure():
    model = make_example()
    view = as_nflts(model)
    assert view.states == model.states
    assert view.label_alphabet == frozenset()
    assert view.size_of_delta() == model.size_of_delta()
    assert as_nflts(view) is view


def test_disjoint_union_shapes():
    a = as_nflts(make_example())
    b = as_nflts(make_example())
    union, inject_a, inject_b = disjoint_union(a, b)
    assert len(union.states) == 10
    assert len(union.transitions) == 12
    assert set(inject_a.values()) | set(inject_b.values()) == union.states
    assert set(inject_a.values()).isdisjoint(inject_b.values())


def test_disjoint_union_preserves_labels():
    a = Nflts(["s"], ["a"], [], ["p"], {"s": {"p": H}})
    b = Nflts(["s"], ["a"], [], ["p"], {})
    union, inject_a, inject_b = disjoint_union(a, b)
    assert union.label_of(inject_a["s"])("p") == H
    assert not union.label_of(inject_b["s"])


def test_disjoint_union_requires_equal_alphabets():
    a = as_nflts(Nfts(["s"], ["a"], []))
    b = as_nflts(Nfts(["s"], ["b"], []))
    with pytest.raises(ModelError):
        disjoint_union(a, b)
