import random

from vertextypes.graph import Graph


def random_graph(rng: random.Random, n: int, p: float = None) -> Graph:
    """Erdos-Renyi graph on n vertices; density drawn at random if not given."""
    if p is None:
        p = rng.random()
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def permute(g: Graph, perm) -> Graph:
    """Relabel vertices: vertex v of g becomes perm[v]."""
    rows = [0] * g.n
    for u, v in g.edges():
        pu, pv = perm[u], perm[v]
        rows[pu] |= 1 << pv
        rows[pv] |= 1 << pu
    return Graph(g.n, rows)
