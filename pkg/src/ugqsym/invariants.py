"""Subgraph-count invariants: separating families, decks, Kelly's lemma.

Also holds the small facts about boolean vectors (elementary symmetric
polynomials, Vandermonde products over tableau columns) and the ordering
used for the published table of the smallest graphs.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from . import config
from .enumeration import filter_connected, generate_by_nodes
from .errors import DomainError
from .graph import CanonGraph, canonical
from .series import evaluate


def separating_family(n: int) -> list[CanonGraph]:
    """Connected graphs on at most n nodes with 1 to C(n,2)//2 edges."""
    if n < 2:
        raise DomainError(f"separating family needs n >= 2, got {n}")
    config.check("max_gen_nodes", n)
    top = comb(n, 2) // 2
    return [g for g in filter_connected(generate_by_nodes(n)) if 1 <= g.edge_count <= top]


@dataclass(frozen=True)
class InvariantVector:
    n: int
    entries: tuple[tuple[CanonGraph, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    @property
    def patterns(self) -> tuple[CanonGraph, ...]:
        return tuple(g for g, _ in self.entries)


def invariant_vector(host, n: int | None = None, family: Sequence[CanonGraph] | None = None) -> InvariantVector:
    host = canonical(host)
    if n is None:
        n = max(host.node_count, 3)
    if host.node_count > n:
        raise DomainError(f"host has {host.node_count} nodes, more than n={n}")
    if family is None:
        family = separating_family(n)
    return InvariantVector(n, tuple((g, evaluate(g, host)) for g in family))


def iso_test(h1, h2, n: int | None = None) -> bool:
    """Decide isomorphism by comparing subgraph counts over the separating family."""
    h1, h2 = canonical(h1), canonical(h2)
    if n is None:
        n = max(h1.node_count, h2.node_count)
    # with n = 2 the edge bound is 0 and the family is empty; padding the
    # hosts with an isolated vertex changes nothing and restores K2
    n = max(n, 3)
    family = separating_family(n)
    return invariant_vector(h1, n, family).values == invariant_vector(h2, n, family).values


def _edge_label(g: CanonGraph) -> str:
    return " ".join(f"{i}-{j}" for i, j in g.edges)


def vectors_to_csv(hosts: Iterable, n: int) -> str:
    """One row per host; columns are labeled by the patterns' edge lists."""
    family = separating_family(n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["host"] + [_edge_label(g) for g in family])
    for h in hosts:
        vec = invariant_vector(h, n, family)
        writer.writerow([_edge_label(canonical(h))] + list(vec.values))
    return buf.getvalue()


@dataclass(frozen=True)
class Deck:
    n: int
    cards: tuple[CanonGraph, ...]

    @property
    def card_order(self) -> int:
        return self.n - 1

    def __len__(self) -> int:
        return len(self.cards)

    def __iter__(self) -> Iterator[CanonGraph]:
        return iter(self.cards)


def deck(host, n: int | None = None) -> Deck:
    """Vertex-deleted subgraphs of ``host`` viewed as a graph on n nodes.

    Vertices beyond the host's support are isolated; deleting one of them
    leaves the host unchanged.
    """
    host = canonical(host)
    if n is None:
        n = host.node_count
    if n < 3:
        raise DomainError(f"deck needs at least 3 nodes, got {n}")
    if host.node_count > n:
        raise DomainError(f"host has {host.node_count} nodes, more than n={n}")
    cards = [
        canonical((i, j) for i, j in host.edges if v not in (i, j))
        for v in range(1, n + 1)
    ]
    return Deck(n, tuple(sorted(cards)))


@dataclass(frozen=True)
class KellyRecord:
    pattern: CanonGraph
    host: CanonGraph
    n: int
    r: int
    lhs: int  # (n - r) * M_G(H)
    rhs: int  # sum over the deck of M_G(H_i)
    printed_lhs: int  # M_G(H)
    printed_rhs: int  # (n - r) * sum over the deck

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def printed_holds(self) -> bool:
        return self.printed_lhs == self.printed_rhs


def kelly_check(pattern, host, n: int | None = None) -> KellyRecord:
    """Compare (n - r) M_G(H) with the sum of M_G over the deck of H.

    The record also carries the variant with the factor on the deck side,
    which is the form printed in the source; it fails in general.
    """
    pattern, host = canonical(pattern), canonical(host)
    if n is None:
        n = host.node_count
    r = pattern.node_count
    if r >= n:
        raise DomainError(f"pattern has {r} nodes, host order is {n}")
    whole = evaluate(pattern, host)
    total = sum(evaluate(pattern, card) for card in deck(host, n))
    return KellyRecord(pattern, host, n, r, (n - r) * whole, total, whole, (n - r) * total)


# -- boolean vectors -------------------------------------------------------


@dataclass(frozen=True)
class BooleanVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"not a boolean vector: {bits}")
        object.__setattr__(self, "bits", tuple(int(b) for b in bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    @property
    def popcount(self) -> int:
        return sum(self.bits)


def _as_boolean(v) -> BooleanVector:
    return v if isinstance(v, BooleanVector) else BooleanVector(tuple(v))


def boolean_vectors(m: int) -> Iterator[BooleanVector]:
    for bits in itertools.product((0, 1), repeat=m):
        yield BooleanVector(bits)


def elementary_eval(v, k: int) -> int:
    """e_k(v), computed as the coefficient of t^k in prod (1 + v_i t)."""
    v = _as_boolean(v)
    if not 0 <= k <= len(v):
        raise DomainError(f"k={k} outside 0..{len(v)}")
    coeffs = [1] + [0] * k
    for x in v.bits:
        for d in range(k, 0, -1):
            coeffs[d] += x * coeffs[d - 1]
    return coeffs[k]


def vandermonde_value(columns: Sequence[Sequence[int]], v) -> int:
    """Product over columns of prod_{a<b} (v[c_a] - v[c_b]); positions are 1-based."""
    v = _as_boolean(v)
    seen = set()
    value = 1
    for col in columns:
        for p in col:
            if not 1 <= p <= len(v):
                raise DomainError(f"position {p} outside 1..{len(v)}")
            if p in seen:
                raise DomainError(f"position {p} used twice")
            seen.add(p)
        for a, b in itertools.combinations(col, 2):
            value *= v[a - 1] - v[b - 1]
    return value


def vandermonde_vanishes(columns: Sequence[Sequence[int]], v) -> bool:
    return vandermonde_value(columns, v) == 0


def partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of m as non-increasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def standard_tableaux(shape: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of ``shape`` as tuples of rows (English notation)."""
    shape = tuple(shape)
    total = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def place(k):
        if k > total:
            yield tuple(tuple(r) for r in rows)
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from place(k + 1)
                rows[i].pop()

    yield from place(1)


def tableau_columns(tableau) -> list[tuple[int, ...]]:
    width = len(tableau[0]) if tableau else 0
    return [tuple(row[c] for row in tableau if c < len(row)) for c in range(width)]


# -- the table of the smallest graphs -------------------------------------


MAX_TABLE_KEY_NODES = 8


def table_key(G) -> tuple[int, ...]:
    """Largest column-major adjacency bitstring (x12, x13, x23, x14, ...) over all labelings."""
    G = canonical(G)
    n = G.node_count
    if n > MAX_TABLE_KEY_NODES:
        raise DomainError(f"table_key is limited to {MAX_TABLE_KEY_NODES} nodes")
    edges = set(G.edges)
    pairs = [(i, j) for j in range(1, n + 1) for i in range(1, j)]
    best = ()
    for perm in itertools.permutations(range(1, n + 1)):
        bits = tuple(
            1 if tuple(sorted((perm[i - 1], perm[j - 1]))) in edges else 0 for i, j in pairs
        )
        if bits > best:
            best = bits
    return best


def table_graphs(count: int) -> list[CanonGraph]:
    """The first ``count`` graphs without isolated vertices in table order.

    Table order: node count, then edge count, then :func:`table_key`
    descending.
    """
    out: list[CanonGraph] = []
    n = 1
    while len(out) < count:
        n += 1
        layer = [g for g in generate_by_nodes(n) if g.node_count == n]
        layer.sort(key=lambda g: (g.edge_count, tuple(-b for b in table_key(g))))
        out.extend(layer)
    return out[:count]


def subgraph_matrix(graphs: Sequence[CanonGraph]) -> list[list[int]]:
    """Rows are hosts, columns are patterns: entry M_G(H)."""
    return [[evaluate(g, h) for g in graphs] for h in graphs]


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) if x else "." for x in row) for row in rows) + "\n"
