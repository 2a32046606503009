"""Bitmask-backed simple graphs and the standard building-block constructors.

A graph of order n stores one integer bitmask per vertex; bit j of row i is
set iff i~j.  Graphs are immutable and hashable, so they are safe to share
across workers.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterable, Iterator, Sequence, Tuple

#: Default order cap.  Keeps graph6 encodings single-byte.
ORDER_CAP = 62

_cap = ORDER_CAP


def get_order_cap() -> int:
    return _cap


def set_order_cap(n: int) -> int:
    """Set the hard order cap, returning the previous value.

    graph6 emission stays limited to 62 regardless; the cap only bounds
    in-memory construction.
    """
    global _cap
    if n < 0:
        raise ValueError("cap must be non-negative")
    prev = _cap
    _cap = n
    return prev


@contextmanager
def order_cap(n: int):
    """Temporarily raise (or lower) the hard order cap."""
    prev = set_order_cap(n)
    try:
        yield
    finally:
        set_order_cap(prev)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError(f"order must be non-negative, got {n}")
        if n > _cap:
            raise ValueError(f"order {n} exceeds the cap of {_cap}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits outside 0..{n - 1}")
            if r & (1 << i):
                raise ValueError(f"row {i} has a loop bit")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    # Construction bypass for internal callers that guarantee validity.
    @classmethod
    def _wrap(cls, n: int, rows: Tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        r = self.rows[v]
        return tuple(j for j in range(self.n) if (r >> j) & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build_graph(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.  Duplicate pairs are tolerated."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if order > _cap:
        raise ValueError(f"order {order} exceeds the cap of {_cap}")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u},{v}) out of range for order {order}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._wrap(order, tuple(rows))


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Vertex degrees sorted non-increasingly."""
    return tuple(sorted(g.degrees(), reverse=True))


# ---------------------------------------------------------------------------
# Building-block constructors


def complete(n: int) -> Graph:
    """K_n."""
    if n < 0:
        raise ValueError("order must be non-negative")
    full = (1 << n) - 1
    return Graph._wrap(n, tuple(full & ~(1 << i) for i in range(n)))


def cycle(t: int) -> Graph:
    """C_t with edges i~(i+1 mod t)."""
    if t < 3:
        raise ValueError(f"cycle needs order >= 3, got {t}")
    return build_graph(t, [(i, (i + 1) % t) for i in range(t)])


def path(n: int) -> Graph:
    """P_n with edges i~i+1."""
    if n < 1:
        raise ValueError(f"path needs order >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def matching(order: int) -> Graph:
    """Perfect matching on an even number of vertices: edges (2i, 2i+1)."""
    if order < 2 or order % 2:
        raise ValueError(f"matching needs even order >= 2, got {order}")
    return build_graph(order, [(2 * i, 2 * i + 1) for i in range(order // 2)])


def cubic(order: int) -> Graph:
    """A 3-regular graph on 2k vertices: the circulant with steps {1, k}.

    This is the Moebius ladder; K_4 at order 4.  Any cubic graph would do for
    the constructions, this one is fixed for reproducibility.
    """
    if order < 4 or order % 2:
        raise ValueError(f"cubic needs even order >= 4, got {order}")
    k = order // 2
    edges = [(i, (i + 1) % order) for i in range(order)]
    edges += [(i, i + k) for i in range(k)]
    return build_graph(order, edges)


def multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with parts laid out consecutively."""
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must all be >= 1, got {sizes}")
    n = sum(sizes)
    if n > _cap:
        raise ValueError(f"order {n} exceeds the cap of {_cap}")
    full = (1 << n) - 1
    rows = []
    offset = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << offset
        for i in range(offset, offset + s):
            rows.append(full & ~part_mask)
        offset += s
    return Graph._wrap(n, tuple(rows))


def join(parts: Sequence[Graph]) -> Graph:
    """Join of graphs: disjoint union plus all cross-part edges.

    Vertices are numbered part by part, in the order given.
    """
    total = sum(g.n for g in parts)
    if total > _cap:
        raise ValueError(f"join order {total} exceeds the cap of {_cap}")
    full = (1 << total) - 1
    rows = []
    offset = 0
    for g in parts:
        part_mask = ((1 << g.n) - 1) << offset
        for r in g.rows:
            rows.append((r << offset) | (full & ~part_mask))
        offset += g.n
    return Graph._wrap(total, tuple(rows))


def add_apex(g: Graph, targets: Iterable[int]) -> Graph:
    """Add a vertex (index n) adjacent to exactly the given target set."""
    n = g.n
    if n + 1 > _cap:
        raise ValueError(f"order {n + 1} exceeds the cap of {_cap}")
    mask = 0
    for v in set(targets):
        if not (0 <= v < n):
            raise ValueError(f"apex target {v} out of range for order {n}")
        mask |= 1 << v
    rows = [r | (1 << n) if (mask >> i) & 1 else r for i, r in enumerate(g.rows)]
    rows.append(mask)
    return Graph._wrap(n + 1, tuple(rows))


_PRIMITIVES = {
    "complete": lambda params: complete(*params),
    "cycle": lambda params: cycle(*params),
    "path": lambda params: path(*params),
    "matching": lambda params: matching(*params),
    "cubic": lambda params: cubic(*params),
    "multipartite": lambda params: multipartite(params),
}


def primitive(kind: str, *params: int) -> Graph:
    """Dispatch to a building-block constructor by name.

    For ``multipartite`` the params are the part sizes; the other kinds take
    a single order argument.
    """
    try:
        make = _PRIMITIVES[kind]
    except KeyError:
        raise ValueError(f"unknown primitive kind {kind!r}") from None
    return make(params)


# ---------------------------------------------------------------------------
# Edge-list text format: "n\nu v\n..."


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line order, then one edge per line."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        order = int(lines[0])
    except ValueError:
        raise ValueError(f"bad order line {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(order, edges)


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
