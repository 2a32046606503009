"""Numba-compiled kernels for the canonical certificate and level extension.

Same algorithm as :mod:`vertextypes.canonical`, specialised to adjacency rows
that fit in int64 (order <= 10, so certificates fit in 45 bits).  The pure
Python implementation remains the reference; tests assert the two agree.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _cert_kernel(n, rows, chunks, certs, useds, cands, ncand, ptr, shift_after):
    if n <= 1:
        return np.int64(0)
    best = np.int64(-1)
    one = np.int64(1)
    useds[0] = 0
    for v in range(n):
        chunks[0, v] = 0
    depth = 0
    entering = True
    while depth >= 0:
        if entering:
            used = useds[depth]
            prev = certs[depth - 1] if depth > 0 else np.int64(0)
            m = np.int64(-1)
            for v in range(n):
                if not (used >> v) & 1 and chunks[depth, v] > m:
                    m = chunks[depth, v]
            cert = (prev << depth) | m
            certs[depth] = cert
            if best >= 0 and cert < (best >> shift_after[depth]):
                depth -= 1
                entering = False
                continue
            if depth == n - 1:
                if cert > best:
                    best = cert
                depth -= 1
                entering = False
                continue
            nc = 0
            for v in range(n):
                if (used >> v) & 1 or chunks[depth, v] != m:
                    continue
                rv = rows[v]
                crv = rv | (one << v)
                dup = False
                for i in range(nc):
                    u = cands[depth, i]
                    ru = rows[u]
                    if ru == rv or (ru | (one << u)) == crv:
                        dup = True
                        break
                if not dup:
                    cands[depth, nc] = v
                    nc += 1
            ncand[depth] = nc
            ptr[depth] = 0
            entering = False
        else:
            if ptr[depth] < ncand[depth]:
                v = cands[depth, ptr[depth]]
                ptr[depth] += 1
                useds[depth + 1] = useds[depth] | (one << v)
                for w in range(n):
                    chunks[depth + 1, w] = (chunks[depth, w] << 1) | (
                        (rows[w] >> v) & 1
                    )
                depth += 1
                entering = True
            else:
                depth -= 1
    return best


@njit(cache=True)
def _extend_kernel(parents, k, max_degree, max_edges):
    """Children certificates for all order-(k-1) parents.

    ``max_degree``/``max_edges`` of -1 mean unconstrained.  Returns
    (certs, masks, parent_indices) for every surviving candidate, duplicates
    included, in deterministic order.
    """
    npar = parents.shape[0]
    nmasks = 1 << (k - 1)
    n = k
    total = n * (n - 1) // 2
    shift_after = np.empty(n, np.int64)
    for d in range(n):
        shift_after[d] = total - (d + 1) * d // 2
    chunks = np.zeros((n, n), np.int64)
    certs = np.zeros(n, np.int64)
    useds = np.zeros(n, np.int64)
    cands = np.zeros((n, n), np.int64)
    ncand = np.zeros(n, np.int64)
    ptr = np.zeros(n, np.int64)
    child = np.zeros(n, np.int64)

    out_cert = np.empty(npar * nmasks, np.int64)
    out_mask = np.empty(npar * nmasks, np.int64)
    out_pidx = np.empty(npar * nmasks, np.int64)
    cnt = 0
    newbit = np.int64(1) << (k - 1)
    for p in range(npar):
        allowed = np.int64(-1)
        if max_degree >= 0:
            allowed = np.int64(0)
            for i in range(k - 1):
                if _popcount(parents[p, i]) < max_degree:
                    allowed |= np.int64(1) << i
        budget = np.int64(-1)
        if max_edges >= 0:
            s = 0
            for i in range(k - 1):
                s += _popcount(parents[p, i])
            budget = max_edges - s // 2
        for mask in range(nmasks):
            pc = _popcount(mask)
            if max_degree >= 0 and (mask & ~allowed or pc > max_degree):
                continue
            if max_edges >= 0 and pc > budget:
                continue
            for i in range(k - 1):
                r = parents[p, i]
                if (mask >> i) & 1:
                    r |= newbit
                child[i] = r
            child[k - 1] = mask
            cert = _cert_kernel(
                n, child, chunks, certs, useds, cands, ncand, ptr, shift_after
            )
            out_cert[cnt] = cert
            out_mask[cnt] = mask
            out_pidx[cnt] = p
            cnt += 1
    return out_cert[:cnt], out_mask[:cnt], out_pidx[:cnt]


def fast_cert(n: int, rows) -> int:
    """Certificate via the compiled kernel; only valid for order <= 10."""
    arr = np.array(rows, dtype=np.int64) if n else np.zeros(1, np.int64)
    total = n * (n - 1) // 2
    shift_after = np.array(
        [total - (d + 1) * d // 2 for d in range(max(n, 1))], dtype=np.int64
    )
    m = max(n, 1)
    return int(
        _cert_kernel(
            n,
            arr,
            np.zeros((m, m), np.int64),
            np.zeros(m, np.int64),
            np.zeros(m, np.int64),
            np.zeros((m, m), np.int64),
            np.zeros(m, np.int64),
            np.zeros(m, np.int64),
            shift_after,
        )
    )


def fast_extend(parents, k, max_degree, max_edges):
    """Children (cert, mask, parent_index) triples via the compiled kernel."""
    arr = np.array(parents, dtype=np.int64).reshape(len(parents), k - 1)
    md = -1 if max_degree is None else max_degree
    me = -1 if max_edges is None else max_edges
    return _extend_kernel(arr, k, md, me)
