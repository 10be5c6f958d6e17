"""The Hopf algebra UGQSym in the basis {M_G}.

Elements are finite linear combinations of canonical graphs with exact
rational coefficients.  The empty graph indexes the unit (the one-vertex
graph has M = 1 and is identified with it).
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from collections import Counter
from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable, Iterator

from . import config
from .errors import DomainError
from .graph import (
    EMPTY,
    CanonGraph,
    automorphism_count,
    canonical,
    components,
    disjoint_union,
    name_of,
    named,
)
from .series import evaluate

Scalar = int | Fraction


def _coerce_key(g) -> CanonGraph:
    return g if isinstance(g, CanonGraph) else canonical(g)


class HopfElement(Mapping):
    """Immutable mapping CanonGraph -> Fraction with no stored zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[CanonGraph, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for g, c in items:
            g = _coerce_key(g)
            acc[g] = acc.get(g, Fraction(0)) + Fraction(c)
        self._terms = {g: c for g, c in acc.items() if c != 0}
        self._hash = None

    def __getitem__(self, g) -> Fraction:
        return self._terms[g]

    def __iter__(self) -> Iterator[CanonGraph]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, g) -> Fraction:
        return self._terms.get(_coerce_key(g), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = other * ONE
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> HopfElement:
        if isinstance(other, (int, Fraction)):
            other = other * ONE
        if not isinstance(other, HopfElement):
            return NotImplemented
        return HopfElement(itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> HopfElement:
        return HopfElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other) -> HopfElement:
        return self + (-other)

    def __rsub__(self, other) -> HopfElement:
        return (-self) + other

    def __mul__(self, other) -> HopfElement:
        if isinstance(other, (int, Fraction)):
            return HopfElement({g: c * other for g, c in self._terms.items()})
        if not isinstance(other, HopfElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> HopfElement:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar) -> HopfElement:
        return self * (Fraction(1) / Fraction(other))

    def __repr__(self) -> str:
        return f"HopfElement({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)


class TensorElement(Mapping):
    """Immutable mapping (CanonGraph, CanonGraph) -> Fraction with no stored zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[tuple[CanonGraph, CanonGraph], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            key = (_coerce_key(a), _coerce_key(b))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    def __getitem__(self, key) -> Fraction:
        return self._terms[key]

    def __iter__(self):
        return iter(sorted(self._terms, key=lambda k: (k[0].key, k[1].key)))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: TensorElement) -> TensorElement:
        return TensorElement(itertools.chain(self._terms.items(), other._terms.items()))

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Componentwise product (a⊗b)(c⊗d) = ac ⊗ bd."""
        out: dict = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                left = basis_product(a, x)
                right = basis_product(b, y)
                for g, cg in left.items():
                    for h, ch in right.items():
                        out[(g, h)] = out.get((g, h), 0) + c * d * cg * ch
        return TensorElement(out)

    def swap(self) -> TensorElement:
        return TensorElement({(b, a): c for (a, b), c in self._terms.items()})

    def __repr__(self) -> str:
        parts = []
        for key in self:
            c = self._terms[key]
            parts.append(f"{c}*({_label(key[0])} ⊗ {_label(key[1])})")
        return "TensorElement(" + " + ".join(parts) + ")"


def basis(G) -> HopfElement:
    return HopfElement({_coerce_key(G): 1})


ONE = HopfElement({EMPTY: 1})
ZERO = HopfElement()


def structure_constant(G1, G2, G) -> int:
    """Ordered pairs (A, B) of edge subsets of G forming G1 and G2 with A ∪ B = E(G)."""
    G1, G2, G = _coerce_key(G1), _coerce_key(G2), _coerce_key(G)
    edges = frozenset(G.edges)
    need1, need2 = G1.edge_count, G2.edge_count
    if need1 + need2 < len(edges) or max(need1, need2) > len(edges):
        return 0
    total = 0
    for A in itertools.combinations(sorted(edges), need1):
        if canonical(A) != G1:
            continue
        rest = edges - set(A)
        extra = need2 - len(rest)
        if extra < 0:
            continue
        for more in itertools.combinations(sorted(A), extra):
            if canonical(rest | set(more)) == G2:
                total += 1
    return total


@functools.lru_cache(maxsize=None)
def _overlay_product(G1: CanonGraph, G2: CanonGraph) -> tuple[tuple[CanonGraph, int], ...]:
    n1, n2 = G1.node_count, G2.node_count
    tally: Counter = Counter()
    base = list(G1.edges)
    for k in range(min(n1, n2) + 1):
        for chosen in itertools.combinations(range(1, n2 + 1), k):
            fresh = [v for v in range(1, n2 + 1) if v not in chosen]
            for targets in itertools.permutations(range(1, n1 + 1), k):
                place = dict(zip(chosen, targets))
                place.update({v: n1 + 1 + t for t, v in enumerate(fresh)})
                union = set(base)
                for i, j in G2.edges:
                    a, b = place[i], place[j]
                    union.add((a, b) if a < b else (b, a))
                tally[canonical(union)] += 1
    # each target G is reached aut(G1) aut(G2) / aut(G) times per copy pair
    denom = automorphism_count(G1) * automorphism_count(G2)
    out = []
    for G, count in tally.items():
        coeff, rem = divmod(count * automorphism_count(G), denom)
        assert rem == 0, "overlay count is not a multiple of the symmetry factor"
        out.append((G, coeff))
    return tuple(sorted(out))


def basis_product(G1: CanonGraph, G2: CanonGraph) -> HopfElement:
    """M_G1 · M_G2 expanded in the M basis."""
    if G1 == EMPTY:
        return basis(G2)
    if G2 == EMPTY:
        return basis(G1)
    return HopfElement(_overlay_product_items(G1, G2))


def multiply(a: HopfElement, b: HopfElement) -> HopfElement:
    out: dict[CanonGraph, Fraction] = {}
    for g, c in a.items():
        for h, d in b.items():
            for k, e in _overlay_product_items(g, h):
                out[k] = out.get(k, 0) + c * d * e
    return HopfElement(out)


def _overlay_product_items(g: CanonGraph, h: CanonGraph):
    if g == EMPTY:
        return ((h, 1),)
    if h == EMPTY:
        return ((g, 1),)
    # checked here because the cached product skips its body on a hit
    config.check("max_nodes", g.node_count + h.node_count)
    if h < g:
        g, h = h, g
    return _overlay_product(g, h)


def splittings(G: CanonGraph) -> Iterator[tuple[CanonGraph, CanonGraph]]:
    """Ordered pairs (G', G'') with G' ⊔ G'' = G, split along components."""
    counts = sorted(Counter(components(G)).items())
    for picks in itertools.product(*(range(m + 1) for _, m in counts)):
        left, right = [], []
        for (comp, m), k in zip(counts, picks):
            left += [comp] * k
            right += [comp] * (m - k)
        yield disjoint_union(*left), disjoint_union(*right)


def coproduct(a: HopfElement) -> TensorElement:
    out: dict = {}
    for G, c in a.items():
        for pair in splittings(G):
            out[pair] = out.get(pair, 0) + c
    return TensorElement(out)


def counit(a: HopfElement) -> Fraction:
    return a.coefficient(EMPTY)


def fold(t: TensorElement) -> HopfElement:
    """Multiplication map UGQSym ⊗ UGQSym -> UGQSym."""
    out = ZERO
    for (g, h), c in t.items():
        out = out + c * basis_product(g, h)
    return out


def tensor_map(t: TensorElement, left=None, right=None) -> TensorElement:
    """Apply linear maps (HopfElement -> HopfElement) to each tensor factor."""
    out: dict = {}
    for (g, h), c in t.items():
        lg = left(basis(g)) if left else basis(g)
        rh = right(basis(h)) if right else basis(h)
        for x, cx in lg.items():
            for y, cy in rh.items():
                out[(x, y)] = out.get((x, y), 0) + c * cx * cy
    return TensorElement(out)


@functools.lru_cache(maxsize=None)
def antipode_basis(G: CanonGraph) -> HopfElement:
    """S(M_G) = -Σ_{(G',G'') ∈ Δ(M_G), G'' ≠ G} M_G' · S(M_G''), with S(1) = 1."""
    if G == EMPTY:
        return ONE
    total = ZERO
    for left, right in splittings(G):
        if right == G:
            continue
        total = total + basis(left) * antipode_basis(right)
    return -total


def antipode(a: HopfElement) -> HopfElement:
    out = ZERO
    for G, c in a.items():
        out = out + c * antipode_basis(G)
    return out


def binomial_of_edge(n: int) -> HopfElement:
    """binom(M_K2, n) computed as a falling factorial in the algebra."""
    if n < 0:
        raise DomainError("n must be non-negative")
    config.check("max_edges", n)
    edge = basis(named("K2"))
    acc = ONE
    for k in range(n):
        acc = acc * (edge - k)
    return acc / math.factorial(n)


def evaluate_element(a: HopfElement, host) -> Fraction:
    return sum((c * evaluate(G, host) for G, c in a.items()), Fraction(0))


# --- generation by connected graphs -------------------------------------

Polynomial = dict  # sorted tuple of connected CanonGraphs -> Fraction


@functools.lru_cache(maxsize=None)
def _connected_polynomial(G: CanonGraph) -> tuple[tuple[tuple[CanonGraph, ...], Fraction], ...]:
    if G == EMPTY:
        return (((), Fraction(1)),)
    comps = components(G)
    if len(comps) == 1:
        return (((G,), Fraction(1)),)
    head, rest = comps[0], disjoint_union(*comps[1:])
    product = basis(head) * basis(rest)
    lead = product.coefficient(G)
    assert lead > 0, "disjoint union missing from product"
    poly: dict = {}
    for mono, c in _connected_polynomial(rest):
        key = tuple(sorted(mono + (head,)))
        poly[key] = poly.get(key, 0) + c
    for H, c in product.items():
        if H == G:
            continue
        assert len(components(H)) < len(comps), "lower term does not have fewer components"
        for mono, d in _connected_polynomial(H):
            poly[mono] = poly.get(mono, 0) - c * d
    return tuple(sorted(((m, c / lead) for m, c in poly.items() if c != 0),
                        key=lambda t: [g.key for g in t[0]]))


def connected_polynomial(G) -> Polynomial:
    """Express M_G as a polynomial in the M_C, C connected.

    Eliminates the leading disjoint-union term of M_C · M_R (R = G minus one
    component C) and recurses on the remaining terms, which have fewer
    components.
    """
    return dict(_connected_polynomial(_coerce_key(G)))


def evaluate_polynomial(poly: Polynomial) -> HopfElement:
    out = ZERO
    for mono, c in poly.items():
        term = ONE
        for C in mono:
            term = term * basis(C)
        out = out + c * term
    return out


# --- display and serialization ------------------------------------------

def _label(G: CanonGraph) -> str:
    if G == EMPTY:
        return "1"
    name = name_of(G)
    if name:
        return f"M[{name}]"
    return "M[" + " ".join(f"{i}-{j}" for i, j in G.edges) + "]"


def format_element(a: HopfElement) -> str:
    if not a:
        return "0"
    out = []
    for G in a:
        c = a[G]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _label(G)
        if G == EMPTY:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag} {body}"
        out.append((sign, text))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, text in out[1:]:
        s += f" {sign} {text}"
    return s


def format_tensor(t: TensorElement) -> str:
    if not t:
        return "0"
    parts = []
    for key in t:
        c = t[key]
        lhs, rhs = _label(key[0]), _label(key[1])
        prefix = "" if c == 1 else f"{c} "
        parts.append(f"{prefix}{lhs} ⊗ {rhs}")
    return " + ".join(parts)


def element_to_data(a: HopfElement) -> list[dict]:
    return [{"graph": [list(e) for e in G.edges], "coeff": str(a[G])} for G in a]


def element_from_data(data: list[dict]) -> HopfElement:
    return HopfElement((canonical(tuple(map(tuple, t["graph"]))), Fraction(t["coeff"])) for t in data)


def element_to_json(a: HopfElement) -> str:
    return json.dumps(element_to_data(a))


def element_from_json(text: str) -> HopfElement:
    return element_from_data(json.loads(text))


def tensor_to_data(t: TensorElement) -> list[dict]:
    return [
        {"left": [list(e) for e in a.edges], "right": [list(e) for e in b.edges], "coeff": str(t[(a, b)])}
        for a, b in t
    ]


def tensor_from_data(data: list[dict]) -> TensorElement:
    return TensorElement(
        ((canonical(tuple(map(tuple, d["left"]))), canonical(tuple(map(tuple, d["right"])))), Fraction(d["coeff"]))
        for d in data
    )


def is_primitive(G) -> bool:
    G = _coerce_key(G)
    return coproduct(basis(G)) == TensorElement({(G, EMPTY): 1, (EMPTY, G): 1})
