import pytest

from vertextypes.classify import (
    TYPE_ORDER,
    VertexType,
    classify_all,
    classify_vertex,
    count_type,
    is_pantypical,
    type_tuple,
)
from vertextypes.construct import pantypical_graph, t_extremal
from vertextypes.graph import build_graph, complete, cycle, path

VS = VertexType.VERY_STRONG
S = VertexType.STRONG
R = VertexType.REGULAR
VT = VertexType.VERY_TYPICAL
T = VertexType.TYPICAL
W = VertexType.WEAK
VW = VertexType.VERY_WEAK


def star(k):
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def test_complete_graphs_all_regular():
    for n in (1, 3, 4):
        assert all(t is R for t in classify_all(complete(n)))
    assert type_tuple(complete(4)) == (0, 0, 4, 0, 0, 0, 0)


def test_isolated_vertex_is_regular():
    g = build_graph(3, [(0, 1)])
    assert classify_vertex(g, 2) is R


def test_star():
    g = star(4)
    assert classify_vertex(g, 0) is VS
    assert all(classify_vertex(g, v) is VW for v in range(1, 5))
    assert type_tuple(star(3)) == (1, 0, 0, 0, 0, 0, 3)


def test_path4():
    g = path(4)
    assert classify_vertex(g, 0) is VW
    assert classify_vertex(g, 1) is S
    # degree-1 vertex whose neighbor also has degree 1 is regular
    assert all(t is R for t in classify_all(path(2)))


def test_five_vertex_mixed_example():
    # triangle w,x,y plus u~w plus z~u; degrees w=3, x=y=2, u=2, z=1
    w, x, y, u, z = range(5)
    g = build_graph(5, [(w, x), (w, y), (x, y), (u, w), (z, u)])
    assert classify_vertex(g, u) is VT
    assert classify_vertex(g, w) is VS
    assert classify_vertex(g, x) is W
    assert classify_vertex(g, y) is W
    assert classify_vertex(g, z) is VW


def test_t_extremal9_tuple():
    assert type_tuple(t_extremal(9)) == (1, 0, 0, 0, 7, 0, 1)


def test_vertex_out_of_range():
    with pytest.raises(ValueError):
        classify_vertex(cycle(3), 3)


def test_tuple_sums_to_order():
    for g in (complete(5), path(6), star(4), t_extremal(9)):
        assert sum(type_tuple(g)) == g.n


def test_count_type_matches_tuple():
    g = t_extremal(9)
    tt = type_tuple(g)
    for i, vt in enumerate(TYPE_ORDER):
        assert count_type(g, vt) == tt[i]


def test_is_pantypical():
    assert not is_pantypical(complete(5))
    assert is_pantypical(pantypical_graph(9))
