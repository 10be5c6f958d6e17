"""Simple labeled graphs, the relabeling action, packing and canonical forms.

A labeled graph is a finite set of pairs ``(i, j)`` with ``1 <= i < j``;
vertices exist only as edge endpoints.  Canonical graphs are packed onto
``{1..n}`` and relabeled so that their sorted edge sequence is the
lexicographically smallest in the relabeling orbit.  Equivalently, the
row-major upper-triangle adjacency bits ``a12 a13 .. a1n a23 ..`` are
maximal, which is what the search in :func:`_canonical_order` optimizes.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import config
from .errors import CapacityError, DomainError, ParseError

Edge = tuple[int, int]

# orbit() walks all of S_n
MAX_ORBIT_NODES = 10


@dataclass(frozen=True)
class LabeledGraph:
    edges: frozenset[Edge]

    def __init__(self, edges: Iterable[Iterable[int]] = ()):
        checked = set()
        for e in edges:
            i, j = e
            i, j = int(i), int(j)
            if not (1 <= i < j):
                raise DomainError(f"edge {(i, j)} must satisfy 1 <= i < j")
            checked.add((i, j))
        object.__setattr__(self, "edges", frozenset(checked))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @property
    def node_count(self) -> int:
        return len(self.support)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"LabeledGraph({list(self.sorted_edges())})"


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class CanonGraph:
    """A packed graph in canonical form; the index of a basis element.

    Build instances with :func:`canonical`; the constructor does not check
    canonicity.
    """

    edges: tuple[Edge, ...]
    node_count: int
    edge_count: int

    @property
    def key(self) -> tuple:
        return (self.edge_count, self.node_count, self.edges)

    def __lt__(self, other: CanonGraph) -> bool:
        if not isinstance(other, CanonGraph):
            return NotImplemented
        return self.key < other.key

    def labeled(self) -> LabeledGraph:
        return LabeledGraph(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __repr__(self) -> str:
        name = name_of(self)
        if name:
            return f"CanonGraph<{name}>"
        return f"CanonGraph({list(self.edges)})"


EMPTY = CanonGraph((), 0, 0)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[k-1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        if self.n != other.n:
            raise DomainError("permutations of different degree")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)


def _as_edges(g) -> frozenset[Edge]:
    if isinstance(g, LabeledGraph):
        return g.edges
    if isinstance(g, CanonGraph):
        return frozenset(g.edges)
    return LabeledGraph(g).edges


def relabel(g, sigma: Permutation) -> LabeledGraph:
    edges = _as_edges(g)
    for e in edges:
        if e[1] > sigma.n:
            raise DomainError(f"label {e[1]} exceeds permutation degree {sigma.n}")
    out = []
    for i, j in edges:
        a, b = sigma(i), sigma(j)
        out.append((a, b) if a < b else (b, a))
    return LabeledGraph(out)


def pack(g) -> LabeledGraph:
    """Apply the order-preserving bijection from the support onto ``{1..k}``."""
    edges = _as_edges(g)
    support = sorted({v for e in edges for v in e})
    rank = {v: k for k, v in enumerate(support, 1)}
    return LabeledGraph((rank[i], rank[j]) for i, j in edges)


def _packed_adjacency(edges: frozenset[Edge]) -> tuple[int, list[int], dict[int, int]]:
    support = sorted({v for e in edges for v in e})
    index = {v: k for k, v in enumerate(support)}
    adj = [0] * len(support)
    for i, j in edges:
        a, b = index[i], index[j]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return len(support), adj, index


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _canonical_order(n: int, adj: list[int]) -> list[int]:
    """Return the vertices in canonical label order (label k+1 -> order[k]).

    Depth-first search over ordered partitions.  At depth i the vertex
    receiving label i+1 is taken from the first cell; its row of adjacency
    bits towards later labels is maximized by putting its neighbours first
    inside every cell, after which each cell splits into neighbours and
    non-neighbours.  Ties are explored exhaustively, except that candidates
    related by an already-discovered automorphism fixing the current prefix
    are skipped, and a leaf equal to the best one found so far jumps back to
    the level where the two paths diverge.
    """
    if n == 0:
        return []
    best_prefix: list[tuple[int, ...] | None] = [None]
    best_order: list[list[int]] = [[]]
    generators: list[list[int]] = []

    def row_value(v: int, cells: list[int]) -> int:
        val = 0
        for idx, cell in enumerate(cells):
            if idx == 0:
                cell &= ~(1 << v)
            size = cell.bit_count()
            a = (adj[v] & cell).bit_count()
            val = (val << size) | (((1 << a) - 1) << (size - a))
        return val

    def orbit_roots(fixed: list[int]) -> list[int] | None:
        active = [g for g in generators if all(g[u] == u for u in fixed)]
        if not active:
            return None
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in active:
            for u in range(n):
                ru, rv = find(u), find(g[u])
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
        return [find(u) for u in range(n)]

    def rec(order: list[int], cells: list[int], prefix: tuple[int, ...]) -> int | None:
        i = len(order)
        if i == n:
            if best_prefix[0] is None or prefix > best_prefix[0]:
                best_prefix[0] = prefix
                best_order[0] = list(order)
                return None
            ref = best_order[0]
            gamma = [0] * n
            for a, b in zip(ref, order):
                gamma[a] = b
            generators.append(gamma)
            return next(k for k in range(n) if ref[k] != order[k])

        first = cells[0]
        rows = {v: row_value(v, cells) for v in _bits(first)}
        top = max(rows.values())
        here = prefix + (top,)
        if best_prefix[0] is not None and here < best_prefix[0][: i + 1]:
            return None
        candidates = [v for v in _bits(first) if rows[v] == top]
        explored: list[int] = []
        for v in candidates:
            if explored:
                roots = orbit_roots(order)
                if roots is not None and any(roots[u] == roots[v] for u in explored):
                    continue
            nb = adj[v]
            new_cells = []
            for idx, cell in enumerate(cells):
                if idx == 0:
                    cell &= ~(1 << v)
                inside, outside = cell & nb, cell & ~nb
                if inside:
                    new_cells.append(inside)
                if outside:
                    new_cells.append(outside)
            order.append(v)
            jump = rec(order, new_cells, here)
            order.pop()
            explored.append(v)
            if jump is not None and jump < i:
                return jump
        return None

    rec([], [(1 << n) - 1], ())
    return best_order[0]


@functools.lru_cache(maxsize=1 << 17)
def _canonical_edges(edges: frozenset[Edge]) -> tuple[tuple[Edge, ...], int]:
    n, adj, index = _packed_adjacency(edges)
    order = _canonical_order(n, adj)
    label = {v: k for k, v in enumerate(order, 1)}
    out = []
    for i, j in edges:
        a, b = label[index[i]], label[index[j]]
        out.append((a, b) if a < b else (b, a))
    return tuple(sorted(out)), n


def canonical(g) -> CanonGraph:
    """Canonical representative of the relabeling orbit of ``g``."""
    if isinstance(g, CanonGraph):
        return g
    edges = _as_edges(g)
    n = len({v for e in edges for v in e})
    config.check("max_nodes", n)
    canon, n = _canonical_edges(edges)
    return CanonGraph(canon, n, len(canon))


def canonical_bruteforce(g, prune_degrees: bool = True) -> CanonGraph:
    """Reference canonical form: minimum over all n! relabelings.

    With ``prune_degrees`` only relabelings sending a maximum-degree vertex
    to label 1 are tried; the result is the same either way.
    """
    edges = pack(g).edges
    n = len({v for e in edges for v in e})
    if n > 8:
        raise CapacityError(f"brute-force canonical form limited to 8 nodes, got {n}")
    deg = Counter(v for e in edges for v in e)
    top = max(deg.values(), default=0)
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        if prune_degrees and n and deg[perm.index(1) + 1] != top:
            continue
        cand = tuple(sorted(
            (min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1]))
            for i, j in edges
        ))
        if best is None or cand < best:
            best = cand
    best = best or ()
    return CanonGraph(best, n, len(best))


def is_canonical(g) -> bool:
    edges = _as_edges(g)
    return tuple(sorted(edges)) == canonical(edges).edges and pack(edges).edges == edges


def orbit(G: CanonGraph) -> frozenset[LabeledGraph]:
    n = G.node_count
    if n > MAX_ORBIT_NODES:
        raise CapacityError(f"orbit enumeration limited to {MAX_ORBIT_NODES} nodes, got {n}")
    edges = G.edges
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        out.add(frozenset(
            (perm[i - 1], perm[j - 1]) if perm[i - 1] < perm[j - 1] else (perm[j - 1], perm[i - 1])
            for i, j in edges
        ))
    return frozenset(LabeledGraph(e) for e in out)


def adjacency(edges: Iterable[Edge], n: int) -> list[int]:
    """Bitmask adjacency over 0-based vertices ``0..n-1`` from 1-based edges."""
    adj = [0] * n
    for i, j in edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return adj


def _search_order(adj: list[int]) -> list[int]:
    # each vertex after the first of its component has a placed neighbour
    n = len(adj)
    seq: list[int] = []
    seen = 0
    for start in sorted(range(n), key=lambda v: -adj[v].bit_count()):
        if seen >> start & 1:
            continue
        seen |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop(0)
            seq.append(v)
            for w in sorted(_bits(adj[v] & ~seen), key=lambda w: -adj[w].bit_count()):
                seen |= 1 << w
                queue.append(w)
    return seq


def count_embeddings(pattern_adj: list[int], host_adj: list[int]) -> int:
    """Number of injective maps pattern -> host sending edges to edges."""
    pn, hn = len(pattern_adj), len(host_adj)
    if pn > hn:
        return 0
    if pn == 0:
        return 1
    seq = _search_order(pattern_adj)
    pos = {v: k for k, v in enumerate(seq)}
    back = [[u for u in _bits(pattern_adj[v]) if pos[u] < pos[v]] for v in seq]
    pdeg = [pattern_adj[v].bit_count() for v in seq]
    hdeg = [a.bit_count() for a in host_adj]
    full = (1 << hn) - 1
    image = [0] * pn

    def rec(k: int, used: int) -> int:
        if k == pn:
            return 1
        allowed = full & ~used
        for u in back[k]:
            allowed &= host_adj[image[u]]
        total = 0
        need = pdeg[k]
        v = seq[k]
        for h in _bits(allowed):
            if hdeg[h] < need:
                continue
            image[v] = h
            total += rec(k + 1, used | (1 << h))
        return total

    return rec(0, 0)


@functools.lru_cache(maxsize=None)
def _connected_automorphisms(edges: tuple[Edge, ...], n: int) -> int:
    """Order of the automorphism group, as a product of stabilizer-chain orbit sizes.

    With the first k vertices of the search order fixed, the images of the
    next vertex that extend to an automorphism form its orbit under the
    pointwise stabilizer.
    """
    adj = adjacency(edges, n)
    seq = _search_order(adj)
    pos = {v: k for k, v in enumerate(seq)}
    back = [[u for u in _bits(adj[v]) if pos[u] < pos[v]] for v in seq]
    deg = [a.bit_count() for a in adj]
    image = [0] * n

    def candidates(k: int, used: int) -> list[int]:
        allowed = ~used & ((1 << n) - 1)
        for u in back[k]:
            allowed &= adj[image[u]]
        v = seq[k]
        return [h for h in _bits(allowed) if deg[h] == deg[v]]

    def extends(k: int, used: int) -> bool:
        if k == n:
            return True
        for h in candidates(k, used):
            image[seq[k]] = h
            if extends(k + 1, used | 1 << h):
                return True
        return False

    total = 1
    used = 0
    for k, v in enumerate(seq):
        orbit_size = 0
        for h in candidates(k, used):
            image[v] = h
            if extends(k + 1, used | 1 << h):
                orbit_size += 1
        total *= orbit_size
        image[v] = v
        used |= 1 << v
    return total


@functools.lru_cache(maxsize=None)
def automorphism_count(G: CanonGraph) -> int:
    """Size of the stabilizer of ``G`` in ``S_n``."""
    total = 1
    for comp, mult in Counter(components(G)).items():
        total *= _connected_automorphisms(comp.edges, comp.node_count) ** mult
        total *= math.factorial(mult)
    return total


def _component_edge_sets(edges: Iterable[Edge]) -> list[list[Edge]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = list(edges)
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return [groups[r] for r in sorted(groups)]


@functools.lru_cache(maxsize=None)
def components(G: CanonGraph) -> tuple[CanonGraph, ...]:
    """Connected components as a sorted tuple (a multiset) of canonical graphs."""
    return tuple(sorted(canonical(part) for part in _component_edge_sets(G.edges)))


def component_count(G) -> int:
    return len(_component_edge_sets(_as_edges(G)))


def is_connected(G) -> bool:
    return component_count(G) == 1


def disjoint_union(*graphs: CanonGraph) -> CanonGraph:
    shift = 0
    edges = []
    for g in graphs:
        edges.extend((i + shift, j + shift) for i, j in g.edges)
        shift += g.node_count
    return canonical(edges)


def degree_sequence(g, n: int | None = None) -> tuple[int, ...]:
    """Non-increasing degree sequence, padded with zeros up to ``n`` entries."""
    edges = _as_edges(g)
    deg = Counter(v for e in edges for v in e)
    seq = sorted(deg.values(), reverse=True)
    if n is not None:
        if n < len(seq):
            raise DomainError(f"graph has {len(seq)} nodes, more than n={n}")
        seq += [0] * (n - len(seq))
    return tuple(seq)


def induced_delete(G: CanonGraph, vertex: int) -> CanonGraph:
    """Delete ``vertex`` (and its edges) and canonicalize what is left."""
    return canonical((i, j) for i, j in G.edges if vertex not in (i, j))


def parse_edge_list(text: str) -> LabeledGraph:
    """Parse "i j" lines (1-based, i < j); blank lines and ``#`` comments are skipped."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer label in {line!r}") from None
        if not 1 <= i < j:
            raise ParseError(f"line {lineno}: edge must satisfy 1 <= i < j, got {line!r}")
        edges.append((i, j))
    return LabeledGraph(edges)


def format_edge_list(g) -> str:
    edges = g.edges if isinstance(g, CanonGraph) else sorted(_as_edges(g))
    return "\n".join(f"{i} {j}" for i, j in edges)


_NAMED_EDGES = {
    "K2": [(1, 2)],
    "P3": [(1, 2), (2, 3)],
    "K3": [(1, 2), (1, 3), (2, 3)],
    "2K2": [(1, 2), (3, 4)],
    "K1,3": [(1, 2), (1, 3), (1, 4)],
    "P4": [(1, 2), (2, 3), (3, 4)],
    "P3+K2": [(1, 2), (2, 3), (4, 5)],
    "3K2": [(1, 2), (3, 4), (5, 6)],
    "paw": [(1, 2), (1, 3), (2, 3), (1, 4)],
    "C4": [(1, 2), (2, 3), (3, 4), (1, 4)],
    "K3+K2": [(1, 2), (1, 3), (2, 3), (4, 5)],
    "K1,4": [(1, 2), (1, 3), (1, 4), (1, 5)],
    "chair": [(1, 2), (1, 3), (1, 4), (2, 5)],
    "P5": [(1, 2), (2, 3), (3, 4), (4, 5)],
    "diamond": [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
    "C5": [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
    "K4": [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    "bowtie": [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)],
    "2K3": [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)],
}


@functools.lru_cache(maxsize=None)
def _named() -> dict[str, CanonGraph]:
    return {name: canonical(edges) for name, edges in _NAMED_EDGES.items()}


def named(name: str) -> CanonGraph:
    """A few small graphs by their usual names (``"K3"``, ``"P3+K2"``, ...)."""
    if name in ("empty", "1"):
        return EMPTY
    try:
        return _named()[name]
    except KeyError:
        raise DomainError(f"unknown graph name {name!r}") from None


def name_of(G: CanonGraph) -> str | None:
    if G == EMPTY:
        return "empty"
    for name, graph in _named().items():
        if graph == G:
            return name
    return None
