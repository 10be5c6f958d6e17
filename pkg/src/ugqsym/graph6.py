"""graph6 encoding of simple graphs.

Vertices are 0-based in the format and 1-based everywhere else in the
package.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import CanonGraph, LabeledGraph, _as_edges, canonical

_BIAS = 63
_SMALL = 62
_LARGE = 258047


def _encode_n(n: int) -> str:
    if n < 0 or n > _LARGE:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= _SMALL:
        return chr(_BIAS + n)
    return "~" + "".join(chr(_BIAS + (n >> s & 63)) for s in (12, 6, 0))


def encode_graph6(g, n: int | None = None) -> str:
    edges = _as_edges(g)
    support = max((j for _, j in edges), default=0)
    if n is None:
        n = g.node_count if isinstance(g, CanonGraph) else support
    if support > n:
        raise ValueError(f"label {support} does not fit in n={n}")
    bits = [0] * (n * (n - 1) // 2)
    for i, j in edges:
        # column-major upper triangle, 0-based: x(0,1), x(0,2), x(1,2), ...
        bits[(j - 1) * (j - 2) // 2 + (i - 1)] = 1
    bits += [0] * (-len(bits) % 6)
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(_BIAS + value))
    return "".join(out)


def parse_graph6(s: str) -> tuple[int, LabeledGraph]:
    """Decode to (node count, labeled graph on 1..n)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
        offset = len(">>graph6<<")
    else:
        offset = 0
    for k, ch in enumerate(s):
        if not _BIAS <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset + k)
    if not s:
        raise ParseError("empty graph6 string", offset)
    if s[0] != "~":
        n, pos = ord(s[0]) - _BIAS, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported graph6 size header", offset)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - _BIAS)
        pos = 4
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(s) != expected:
        raise ParseError(
            f"graph6 length {len(s)} does not match n={n} (expected {expected})",
            offset + min(len(s), expected),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[pos + k // 6]) - _BIAS
            if byte >> (5 - k % 6) & 1:
                edges.append((i + 1, j + 1))
            k += 1
    return n, LabeledGraph(edges)


def decode_graph6(s: str) -> CanonGraph:
    return canonical(parse_graph6(s)[1])
