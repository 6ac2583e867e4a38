"""graph6 encoding (short form, order <= 62).

Byte ``63 + order`` followed by the upper triangle of the adjacency matrix,
read column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed six bits
per byte, most significant first, each byte offset by 63.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


def encode(g: Graph) -> str:
    n = g.order
    if n > MAX_SHORT_ORDER:
        raise ValueError(f"short graph6 supports order <= {MAX_SHORT_ORDER}")
    adj = g.adj
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"byte {ord(ch)} outside [63, 126]")
    n = ord(s[0]) - 63
    if n > MAX_SHORT_ORDER:
        raise ValueError("long-form graph6 (order > 62) is not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise ValueError(f"graph6 of order {n} needs {expected} bytes, got {len(s)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = (6 - nbits % 6) % 6
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits")
    return Graph._trusted(n, tuple(rows))
