"""Exhaustive generation of canonical graphs and the Euler transform.

Generation is orderly: a canonical graph is extended only by edges that
come after its last edge (row-major order), and a child is kept only if it
is itself canonical.  Deleting the last edge of a canonical graph leaves a
canonical graph, so every graph is produced exactly once, from that parent.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from . import config
from .graph import EMPTY, CanonGraph, canonical, component_count

CountSeries = list[int]


def _children(parent: CanonGraph, max_label: int) -> list[CanonGraph]:
    p = parent.node_count
    last = parent.edges[-1] if parent.edges else (0, 0)
    out = []
    top = min(p + 2, max_label)
    for i in range(1, min(p + 1, max_label) + 1):
        for j in range(i + 1, top + 1):
            if (i, j) <= last:
                continue
            # labels must stay packed: p+2 only together with p+1
            if j == p + 2 and i != p + 1:
                continue
            edges = parent.edges + ((i, j),)
            child = tuple(sorted(edges))
            canon = canonical(child)
            if canon.edges == child:
                out.append(canon)
    return out


def generate_by_edges(m: int) -> list[CanonGraph]:
    """All canonical graphs with exactly ``m`` edges and no isolated vertex."""
    config.check("max_edges", m)
    level = [EMPTY]
    for _ in range(m):
        level = [c for g in level for c in _children(g, 2 * m)]
    return sorted(level)


def generate_by_nodes(n: int) -> list[CanonGraph]:
    """All canonical graphs with at most ``n`` nodes.

    These are in bijection with the graphs on exactly ``n`` nodes once
    isolated vertices are allowed.
    """
    config.check("max_gen_nodes", n)
    out = []
    level = [EMPTY]
    while level:
        out.extend(level)
        level = [c for g in level for c in _children(g, n)]
    return sorted(out)


def generate_naive_by_edges(m: int) -> list[CanonGraph]:
    """Augment every graph with m-1 edges by every possible edge, dedupe by canonical form."""
    config.check("max_edges", m)
    level = {EMPTY}
    for _ in range(m):
        nxt = set()
        for g in level:
            n = g.node_count
            present = set(g.edges)
            for i, j in itertools.combinations(range(1, n + 3), 2):
                if (i, j) not in present:
                    nxt.add(canonical(present | {(i, j)}))
        level = nxt
    return sorted(level)


def generate_naive_by_nodes(n: int) -> list[CanonGraph]:
    """Canonicalize every labeled graph on ``{1..n}``."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        seen.add(canonical([p for k, p in enumerate(pairs) if mask >> k & 1]))
    return sorted(seen)


def filter_connected(gs: Iterable[CanonGraph]) -> list[CanonGraph]:
    return [g for g in gs if component_count(g) == 1]


def euler_transform(c: Sequence[int], upto: int) -> CountSeries:
    """Coefficients 0..upto of prod_{n>0} (1 - q^n)^(-c[n]).

    ``c[0]`` is ignored.
    """
    if len(c) <= upto:
        raise ValueError(f"need coefficients up to index {upto}, got {len(c) - 1}")
    a = [0] * (upto + 1)
    for d in range(1, upto + 1):
        for k in range(d, upto + 1, d):
            a[k] += d * c[d]
    b = [1] + [0] * upto
    for n in range(1, upto + 1):
        total = sum(a[k] * b[n - k] for k in range(1, n + 1))
        b[n], rem = divmod(total, n)
        assert rem == 0
    return b


def graph_edge_counts(upto: int) -> CountSeries:
    return [len(generate_by_edges(m)) for m in range(upto + 1)]


def connected_edge_counts(upto: int) -> CountSeries:
    # index 0 is 1 by convention
    return [1] + [len(filter_connected(generate_by_edges(m))) for m in range(1, upto + 1)]


def graph_node_counts(upto: int) -> CountSeries:
    return [len(generate_by_nodes(n)) for n in range(upto + 1)]


def connected_node_counts(upto: int) -> CountSeries:
    # index 0 is 1 by convention; index 1 is the single vertex, which has no
    # edge and is therefore not among the generated graphs
    graphs = generate_by_nodes(upto) if upto >= 2 else []
    counts = [1, 1][: upto + 1]
    connected = filter_connected(graphs)
    for n in range(2, upto + 1):
        counts.append(sum(1 for g in connected if g.node_count == n))
    return counts
