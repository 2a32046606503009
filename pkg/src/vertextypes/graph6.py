"""graph6 codec for graphs of order <= 62 (single-byte length form).

The edge bits are the column-major upper triangle (x_{0,1}, x_{0,2}, x_{1,2},
x_{0,3}, ...) packed big-endian into 6-bit groups, each group value offset by
63, zero-padded at the end.
"""

from __future__ import annotations

from .graph import ORDER_CAP, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def emit_graph6(g: Graph) -> bytes:
    """Encode a graph as its canonical graph6 byte string."""
    n = g.n
    if n > ORDER_CAP:
        raise Graph6Error(f"order {n} exceeds the single-byte graph6 range")
    out = [63 + n]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode a graph6 byte string (optional '>>graph6<<' header allowed)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 input")
    for b in data:
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside the graph6 range 63..126")
    if data[0] == 126:
        raise Graph6Error("multi-byte graph6 orders (> 62) are not supported")
    n = data[0] - 63
    body = data[1:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(
            f"expected {expect} edge bytes for order {n}, got {len(body)}"
        )
    rows = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for b in body:
        v = b - 63
        for k in range(5, -1, -1):
            bit = (v >> k) & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
            elif bit:
                raise Graph6Error("nonzero padding bits")
    return Graph._wrap(n, tuple(rows))
