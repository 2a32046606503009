"""Seven-way vertex classification by neighbor-degree comparison.

Each vertex is classified from the mix of lower / equal / higher degrees
among its neighbors; the mix determines exactly one of the seven types, so
the classification is a partition by construction.
"""

from __future__ import annotations

from enum import Enum
from typing import Tuple

from .graph import Graph


class VertexType(Enum):
    VERY_STRONG = "very_strong"
    STRONG = "strong"
    REGULAR = "regular"
    VERY_TYPICAL = "very_typical"
    TYPICAL = "typical"
    WEAK = "weak"
    VERY_WEAK = "very_weak"


#: Fixed component order of the type tuple: (VS, S, R, VT, T, W, VW).
TYPE_ORDER: Tuple[VertexType, ...] = tuple(VertexType)

_MIX_TO_TYPE = {
    # (has lower, has equal, has higher) neighbor degrees
    (False, False, False): VertexType.REGULAR,  # isolated vertex
    (True, False, False): VertexType.VERY_STRONG,
    (True, True, False): VertexType.STRONG,
    (False, True, False): VertexType.REGULAR,
    (True, False, True): VertexType.VERY_TYPICAL,
    (True, True, True): VertexType.TYPICAL,
    (False, True, True): VertexType.WEAK,
    (False, False, True): VertexType.VERY_WEAK,
}

# Minimum degree each type implies; asserted as a consistency check, the mix
# conditions already force them.
_MIN_DEGREE = {
    VertexType.VERY_STRONG: 2,
    VertexType.STRONG: 2,
    VertexType.REGULAR: 0,
    VertexType.VERY_TYPICAL: 2,
    VertexType.TYPICAL: 3,
    VertexType.WEAK: 2,
    VertexType.VERY_WEAK: 1,
}


def classify_vertex(g: Graph, v: int) -> VertexType:
    """Classify one vertex into exactly one of the seven types."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    return _classify(g.rows, g.degrees(), v)


def _classify(rows, degs, v: int) -> VertexType:
    dv = degs[v]
    lower = equal = higher = False
    r = rows[v]
    w = 0
    while r:
        if r & 1:
            dw = degs[w]
            if dw < dv:
                lower = True
            elif dw == dv:
                equal = True
            else:
                higher = True
        r >>= 1
        w += 1
    t = _MIX_TO_TYPE[(lower, equal, higher)]
    assert dv >= _MIN_DEGREE[t], f"degree {dv} too small for {t}"
    return t


def classify_all(g: Graph) -> Tuple[VertexType, ...]:
    """Types of all vertices, indexed by vertex."""
    degs = g.degrees()
    return tuple(_classify(g.rows, degs, v) for v in range(g.n))


def type_tuple(g: Graph) -> Tuple[int, int, int, int, int, int, int]:
    """The 7-tuple counting (VS, S, R, VT, T, W, VW) vertices."""
    counts = dict.fromkeys(TYPE_ORDER, 0)
    for t in classify_all(g):
        counts[t] += 1
    return tuple(counts[t] for t in TYPE_ORDER)


def count_type(g: Graph, t: VertexType) -> int:
    return sum(1 for x in classify_all(g) if x is t)


def is_pantypical(g: Graph) -> bool:
    """True iff the graph has at least one vertex of every one of the seven types."""
    seen = set()
    degs = g.degrees()
    for v in range(g.n):
        seen.add(_classify(g.rows, degs, v))
        if len(seen) == 7:
            return True
    return False
