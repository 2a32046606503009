import pytest

from vertextypes.graph import (
    Graph,
    add_apex,
    build_graph,
    complete,
    cubic,
    cycle,
    degree_sequence,
    emit_edge_list,
    get_order_cap,
    join,
    matching,
    multipartite,
    order_cap,
    parse_edge_list,
    path,
    primitive,
)


def test_build_and_accessors():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 1)])  # duplicate tolerated
    assert g.n == 4
    assert g.edge_count() == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degrees() == (1, 2, 2, 1)
    assert g.neighbors(1) == (0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert degree_sequence(g) == (2, 2, 1, 1)


def test_build_rejects_bad_edges():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(-1, [])


def test_graph_validates_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b10))  # loop bits
    with pytest.raises(ValueError):
        Graph(1, (0b10,))  # bit out of range


def test_graph_immutable_and_hashable():
    g = complete(3)
    with pytest.raises(AttributeError):
        g.n = 5
    assert g == complete(3)
    assert hash(g) == hash(complete(3))
    assert g != cycle(3) or g == cycle(3)  # C3 == K3


def test_order_cap():
    with pytest.raises(ValueError):
        build_graph(get_order_cap() + 1, [])
    with order_cap(100):
        g = build_graph(80, [(0, 79)])
        assert g.n == 80
    with pytest.raises(ValueError):
        build_graph(80, [])


def test_constructors():
    assert complete(5).degrees() == (4,) * 5
    assert cycle(5).degrees() == (2,) * 5
    assert path(4).degrees() == (1, 2, 2, 1)
    assert matching(6).degrees() == (1,) * 6
    assert cubic(8).degrees() == (3,) * 8
    assert cubic(4) == complete(4)
    g = multipartite((1, 2, 3))
    assert g.degrees() == (5, 4, 4, 3, 3, 3)
    assert not g.has_edge(1, 2) and g.has_edge(0, 1)


def test_constructor_rejects():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        matching(3)
    with pytest.raises(ValueError):
        cubic(7)
    with pytest.raises(ValueError):
        multipartite((0, 2))


def test_join():
    g = join([complete(1), cycle(3)])
    # K1 v C3 = K4
    assert g == complete(4)
    h = join([matching(2), matching(2)])
    assert h.degrees() == (3, 3, 3, 3)


def test_add_apex():
    g = add_apex(cycle(4), [0, 2])
    assert g.n == 5
    assert g.degree(4) == 2
    assert g.has_edge(4, 0) and g.has_edge(4, 2) and not g.has_edge(4, 1)
    with pytest.raises(ValueError):
        add_apex(cycle(4), [7])


def test_primitive_dispatch():
    assert primitive("complete", 4) == complete(4)
    assert primitive("multipartite", 2, 3) == multipartite((2, 3))
    with pytest.raises(ValueError):
        primitive("donut", 4)


def test_edge_list_round_trip():
    g = build_graph(5, [(0, 1), (2, 4)])
    assert parse_edge_list(emit_edge_list(g)) == g
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("3\n1 2 3")
