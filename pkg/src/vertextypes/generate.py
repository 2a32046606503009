"""Isomorph-free exhaustive generation of small graphs.

Graphs are generated level by level: every order-k representative is
extended by a new vertex k with each subset of {0..k-1} as neighborhood,
and the children are deduplicated by canonical certificate.  Every order-n
graph arises by deleting a vertex from some order-(n-1) graph, so visiting
one representative per certificate at each level is complete and
irredundant.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from .canonical import canonical_cert
from .graph import Graph

try:  # compiled kernels; the pure-Python path is the reference fallback
    from ._fastcanon import fast_extend

    _HAVE_FAST = True
except ImportError:  # pragma: no cover
    fast_extend = None
    _HAVE_FAST = False

#: Default order guard; order 9 is the target scale, 10 is possible.
DEFAULT_ENUM_GUARD = 10

#: Candidate count above which a worker pool is worth spinning up.
_PARALLEL_THRESHOLD = 50_000


@dataclass
class EnumConstraint:
    """Pruning constraints for enumeration.

    ``max_degree`` and ``max_edges`` are monotone under vertex addition and
    are enforced on partial graphs.  ``min_degree`` is only meaningful on the
    finished graphs and is checked at the final order.  ``predicate`` is an
    arbitrary pruning hook evaluated on partial graphs; it must be
    monotone-safe (if it rejects a graph it must reject every extension),
    and it forces single-process generation.
    """

    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    max_edges: Optional[int] = None
    predicate: Optional[Callable[[Graph], bool]] = None


def _extend_level(
    parents: List[Tuple[int, ...]],
    k: int,
    max_degree: Optional[int],
    max_edges: Optional[int],
) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """Yield (certificate, rows) for all children of the given order-(k-1)
    parents, duplicates included."""
    nmasks = 1 << (k - 1)
    newbit = 1 << (k - 1)
    for rows in parents:
        if max_degree is not None:
            # only vertices below the degree bound may gain the new neighbor
            allowed = 0
            for i, r in enumerate(rows):
                if r.bit_count() < max_degree:
                    allowed |= 1 << i
        if max_edges is not None:
            budget = max_edges - sum(r.bit_count() for r in rows) // 2
        for mask in range(nmasks):
            if max_degree is not None and (
                mask & ~allowed or mask.bit_count() > max_degree
            ):
                continue
            if max_edges is not None and mask.bit_count() > budget:
                continue
            child = tuple(
                r | newbit if (mask >> i) & 1 else r for i, r in enumerate(rows)
            ) + (mask,)
            yield canonical_cert(k, child), child


def iter_levels(
    n_max: int,
    constraint: Optional[EnumConstraint] = None,
    guard: int = DEFAULT_ENUM_GUARD,
    jobs: int = 1,
) -> Iterator[Tuple[int, List[Graph]]]:
    """Yield (order, representatives) for every order 1..n_max.

    Exactly one representative per isomorphism class satisfying the monotone
    constraints is produced at each level, in a deterministic order.
    ``min_degree`` is not applied here (it is not monotone); callers filter
    finished graphs themselves.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > guard:
        raise ValueError(
            f"order {n_max} above the enumeration guard {guard}; "
            "raise the guard explicitly if you mean it"
        )
    c = constraint or EnumConstraint()

    level: List[Tuple[int, ...]] = [(0,)]
    if c.max_edges is not None and c.max_edges < 0:
        level = []
    if c.predicate is not None:
        level = [r for r in level if c.predicate(Graph._wrap(1, r))]
    yield 1, [Graph._wrap(1, r) for r in level]

    for k in range(2, n_max + 1):
        seen = set()
        nxt: List[Tuple[int, ...]] = []
        candidates = len(level) << (k - 1)
        fast_ok = _HAVE_FAST and c.predicate is None and k <= 10 and level
        if fast_ok and jobs > 1 and candidates >= _PARALLEL_THRESHOLD:
            chunks = _split(level, jobs * 4)
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                results = pool.imap(
                    _fast_extend_chunk,
                    [(ch, k, c.max_degree, c.max_edges) for ch in chunks],
                )
                for part, chunk in zip(results, chunks):
                    _merge_fast(part, chunk, k, seen, nxt)
        elif fast_ok:
            part = fast_extend(level, k, c.max_degree, c.max_edges)
            _merge_fast(part, level, k, seen, nxt)
        else:
            for cert, child in _extend_level(level, k, c.max_degree, c.max_edges):
                if cert in seen:
                    continue
                if c.predicate is not None and not c.predicate(
                    Graph._wrap(k, child)
                ):
                    continue
                seen.add(cert)
                nxt.append(child)
        level = nxt
        yield k, [Graph._wrap(k, r) for r in level]


def _fast_extend_chunk(args):
    parents, k, max_degree, max_edges = args
    return fast_extend(parents, k, max_degree, max_edges)


def _merge_fast(part, parents, k, seen, nxt) -> None:
    """Dedup (cert, mask, parent_index) kernel output into the next level."""
    certs, masks, pidx = part
    newbit = 1 << (k - 1)
    for i in range(len(certs)):
        cert = int(certs[i])
        if cert in seen:
            continue
        seen.add(cert)
        mask = int(masks[i])
        rows = parents[int(pidx[i])]
        nxt.append(
            tuple(
                r | newbit if (mask >> j) & 1 else r for j, r in enumerate(rows)
            )
            + (mask,)
        )


def _split(items: List, nchunks: int) -> List[List]:
    nchunks = max(1, min(nchunks, len(items)))
    size = (len(items) + nchunks - 1) // nchunks
    return [items[i : i + size] for i in range(0, len(items), size)]


def enumerate_graphs(
    n: int,
    constraint: Optional[EnumConstraint] = None,
    visit: Optional[Callable[[Graph], None]] = None,
    guard: int = DEFAULT_ENUM_GUARD,
    jobs: int = 1,
) -> int:
    """Visit one representative per isomorphism class of order-n graphs
    satisfying the constraint; returns the number visited.

    Exceptions raised by the visitor propagate and abort the run.
    """
    c = constraint or EnumConstraint()
    count = 0
    for order, graphs in iter_levels(n, c, guard=guard, jobs=jobs):
        if order != n:
            continue
        for g in graphs:
            if c.min_degree is not None and (
                g.n and min(g.degrees()) < c.min_degree
            ):
                continue
            count += 1
            if visit is not None:
                visit(g)
    return count


def count_graphs(n: int, guard: int = DEFAULT_ENUM_GUARD, jobs: int = 1) -> int:
    """Number of isomorphism classes of simple graphs of order n."""
    return enumerate_graphs(n, guard=guard, jobs=jobs)
