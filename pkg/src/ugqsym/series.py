"""Truncations of the invariant series M_G and their evaluation on hosts.

``expand(G, N)`` lists every labeled copy of ``G`` whose labels are at most
``N``; it is the series M_G with all variables carrying a larger label sent
to zero, and for ``N = n`` it is the restriction polynomial P_{n,G}.

Evaluating M_G on a host H (each variable set to 1 or 0 according to the
adjacency of H) counts the subgraphs of H isomorphic to G, where a subgraph
is an edge subset.  :func:`evaluate` counts them by backtracking;
:func:`evaluate_oracle` enumerates edge subsets and is kept as an
independent check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import config
from .graph import (
    EMPTY,
    CanonGraph,
    LabeledGraph,
    _as_edges,
    adjacency,
    automorphism_count,
    canonical,
    count_embeddings,
    orbit,
    pack,
)


@dataclass(frozen=True)
class TruncatedSeries:
    pattern: CanonGraph
    max_label: int
    monomials: frozenset[LabeledGraph]

    def __len__(self) -> int:
        return len(self.monomials)

    def evaluate_at(self, host) -> int:
        """Sum of monomial indicators under the 0/1 assignment given by ``host``'s edges."""
        edges = _as_edges(host)
        if self.pattern == EMPTY:
            return 1
        return sum(1 for m in self.monomials if m.edges <= edges)

    def to_data(self) -> list[list[list[int]]]:
        return sorted([list(e) for e in m.sorted_edges()] for m in self.monomials)


def expand(pattern: CanonGraph, N: int) -> TruncatedSeries:
    """All labeled copies of ``pattern`` using labels in ``{1..N}``."""
    config.check("max_labels", N)
    pattern = canonical(pattern)
    n = pattern.node_count
    if pattern == EMPTY:
        # M of the empty graph is the constant 1: a single empty monomial
        return TruncatedSeries(pattern, N, frozenset([LabeledGraph()]))
    if N < n:
        return TruncatedSeries(pattern, N, frozenset())
    copies = orbit(pattern)
    out = set()
    for labels in itertools.combinations(range(1, N + 1), n):
        for g in copies:
            out.add(LabeledGraph((labels[i - 1], labels[j - 1]) for i, j in g.edges))
    return TruncatedSeries(pattern, N, frozenset(out))


def restriction(pattern: CanonGraph, n: int) -> TruncatedSeries:
    """The polynomial P_{n,G}: monomials of M_G whose labels are all at most n."""
    return expand(pattern, n)


def _host_adjacency(host) -> list[int]:
    edges = pack(host).edges
    n = len({v for e in edges for v in e})
    return adjacency(edges, n)


def evaluate(pattern, host) -> int:
    """M_G(H): the number of subgraphs of ``host`` isomorphic to ``pattern``."""
    pattern = canonical(pattern)
    if pattern == EMPTY:
        return 1
    embeddings = count_embeddings(
        adjacency(pattern.edges, pattern.node_count), _host_adjacency(host)
    )
    count, rem = divmod(embeddings, automorphism_count(pattern))
    assert rem == 0, "embedding count not divisible by automorphism count"
    return count


def evaluate_oracle(pattern, host) -> int:
    """Edge-subset enumeration: count subsets of the host's edges forming ``pattern``."""
    pattern = canonical(pattern)
    edges = sorted(_as_edges(host))
    return sum(
        1
        for subset in itertools.combinations(edges, pattern.edge_count)
        if canonical(subset) == pattern
    )
