"""Canonical forms for small graphs.

The certificate of a graph is the lexicographically maximal packed
upper-triangle adjacency bit string over all vertex relabelings, in the
vertex-incremental (column-major) bit order also used by graph6: when vertex
p_k is placed at position k it contributes the k bits of its adjacency to
positions 0..k-1.  Two graphs of equal order are isomorphic iff their
certificates are equal.

The search places vertices one position at a time.  Lexicographic order makes
the locally maximal chunk forced at every position, so only ties branch;
twin vertices (equal open or closed neighborhoods) produce identical
subtrees and are explored once, and branches that fall behind the best
certificate prefix are cut.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

try:  # compiled fast path for order <= 10; pure Python is the reference
    from ._fastcanon import fast_cert as _fast_cert
except ImportError:  # pragma: no cover
    _fast_cert = None

#: Default order guard; the search is exact but exponential in the worst case.
DEFAULT_CANON_GUARD = 10


@dataclass(frozen=True)
class CanonicalForm:
    order: int
    bits: int


def canonical_cert(n: int, rows) -> int:
    """Certificate of the graph given as adjacency bitmask rows.

    Internal entry point without the order guard; rows may be any sequence
    of ints.  Used directly by the enumerator hot loop.
    """
    if n <= 1:
        return 0
    total_bits = n * (n - 1) // 2
    # bits emitted once position d has been placed
    shift_after = [total_bits - (d + 1) * d // 2 for d in range(n)]
    best = -1
    rng = range(n)

    def place(depth, used, chunks, cert):
        nonlocal best
        m = -1
        for v in rng:
            if not (used >> v) & 1 and chunks[v] > m:
                m = chunks[v]
        cert = (cert << depth) | m
        if best >= 0 and cert < (best >> shift_after[depth]):
            return
        if depth == n - 1:
            if cert > best:
                best = cert
            return
        chosen = []
        for v in rng:
            if (used >> v) & 1 or chunks[v] != m:
                continue
            rv = rows[v]
            crv = rv | (1 << v)
            for u in chosen:
                ru = rows[u]
                if ru == rv or (ru | (1 << u)) == crv:
                    break
            else:
                chosen.append(v)
        for v in chosen:
            used2 = used | (1 << v)
            chunks2 = [(chunks[w] << 1) | ((rows[w] >> v) & 1) for w in rng]
            place(depth + 1, used2, chunks2, cert)

    place(0, 0, [0] * n, 0)
    return best


def canonical_form(g: Graph, guard: int = DEFAULT_CANON_GUARD) -> CanonicalForm:
    """Canonical form of a graph; equal forms iff isomorphic."""
    if g.n > guard:
        raise ValueError(
            f"order {g.n} above the canonical-form guard {guard}; "
            "raise the guard explicitly if you mean it"
        )
    if _fast_cert is not None and g.n <= 10:
        return CanonicalForm(g.n, _fast_cert(g.n, g.rows))
    return CanonicalForm(g.n, canonical_cert(g.n, g.rows))


def are_isomorphic(g: Graph, h: Graph, guard: int = DEFAULT_CANON_GUARD) -> bool:
    if g.n != h.n:
        return False
    return canonical_form(g, guard) == canonical_form(h, guard)
