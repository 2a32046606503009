import random

import pytest

from conftest import random_graph
from vertextypes.graph import build_graph, complete, path
from vertextypes.graph6 import Graph6Error, emit_graph6, parse_graph6


def test_known_encodings():
    assert emit_graph6(complete(1)) == b"@"
    assert emit_graph6(path(3)) == b"Bg"
    assert emit_graph6(complete(4)) == b"C~"
    assert emit_graph6(build_graph(0, [])) == b"?"


def test_parse_known():
    assert parse_graph6(b"C~") == complete(4)
    assert parse_graph6("Bg") == path(3)
    assert parse_graph6(b">>graph6<<C~") == complete(4)


def test_round_trip_random():
    rng = random.Random(6)
    for _ in range(500):
        g = random_graph(rng, rng.randrange(0, 33))
        assert parse_graph6(emit_graph6(g)) == g


def test_parse_errors():
    with pytest.raises(Graph6Error):
        parse_graph6(b"")
    with pytest.raises(Graph6Error):
        parse_graph6(b"C~~")  # extra body byte
    with pytest.raises(Graph6Error):
        parse_graph6(b"C")  # missing body
    with pytest.raises(Graph6Error):
        parse_graph6(b"B!")  # byte below 63
    with pytest.raises(Graph6Error):
        parse_graph6(b"~???")  # multi-byte order form
    with pytest.raises(Graph6Error):
        parse_graph6(b"A^")  # nonzero padding (order 2 has 1 edge bit, 5 pad)


def test_emit_rejects_above_62(monkeypatch):
    from vertextypes.graph import order_cap

    with order_cap(100):
        g = build_graph(63, [])
        with pytest.raises(Graph6Error):
            emit_graph6(g)
