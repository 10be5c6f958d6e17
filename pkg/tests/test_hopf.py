from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from ugqsym import config
from ugqsym.enumeration import generate_by_edges, generate_by_nodes
from ugqsym.errors import CapacityError
from ugqsym.graph import EMPTY, component_count, components, disjoint_union, is_connected, named
from ugqsym.hopf import (
    ONE,
    ZERO,
    HopfElement,
    TensorElement,
    antipode,
    basis,
    basis_product,
    binomial_of_edge,
    connected_polynomial,
    coproduct,
    counit,
    element_from_json,
    element_to_json,
    evaluate_element,
    evaluate_polynomial,
    fold,
    format_element,
    is_primitive,
    multiply,
    structure_constant,
    tensor_from_data,
    tensor_map,
    tensor_to_data,
)
from ugqsym.series import evaluate


def M(*terms):
    """M((2, "P3"), (1, "K2")) -> 2 M_P3 + M_K2."""
    return HopfElement((named(name), c) for c, name in terms)


def small_graphs(max_edges):
    return [g for m in range(1, max_edges + 1) for g in generate_by_edges(m)]


def test_basis_and_unit():
    assert basis(named("K2")) == M((1, "K2"))
    assert basis(EMPTY) == ONE
    assert dict(basis(named("K3"))) == {named("K3"): 1}


def test_no_zero_coefficients():
    a = M((1, "K2"), (2, "P3"))
    assert a - a == ZERO
    assert len(a - M((2, "P3"))) == 1


@pytest.mark.parametrize(
    "g1, g2, g, c",
    [("P3", "K2", "K3", 3), ("K2", "K2", "P3", 2), ("K2", "K2", "K2", 1), ("K2", "K2", "K3", 0)],
)
def test_structure_constant_examples(g1, g2, g, c):
    assert structure_constant(named(g1), named(g2), named(g)) == c


@pytest.mark.parametrize(
    "left, right, expected",
    [
        ("K2", "K2", M((1, "K2"), (2, "P3"), (2, "2K2"))),
        ("P3", "K2", M((2, "P3"), (3, "K3"), (3, "K1,3"), (2, "P4"), (1, "P3+K2"))),
        ("2K2", "K2", M((2, "2K2"), (1, "P4"), (2, "P3+K2"), (3, "3K2"))),
        ("K3", "K3", M((1, "K3"), (2, "diamond"), (2, "bowtie"), (2, "2K3"))),
    ],
)
def test_product_displays(left, right, expected):
    assert basis(named(left)) * basis(named(right)) == expected


def test_product_string():
    assert format_element(basis(named("K2")) * basis(named("K2"))) == "M[K2] + 2 M[P3] + 2 M[2K2]"


def test_product_matches_structure_constants():
    gs = small_graphs(2) + [named("K3"), named("P4")]
    for g1, g2 in itertools.combinations_with_replacement(gs, 2):
        prod = basis_product(g1, g2)
        for G, c in prod.items():
            assert c == structure_constant(g1, g2, G)
            assert structure_constant(g2, g1, G) == c


def test_product_pointwise_on_hosts():
    gs = small_graphs(3)
    hosts = generate_by_nodes(5)[::3]
    for g1, g2 in itertools.combinations_with_replacement(gs, 2):
        prod = basis(g1) * basis(g2)
        for h in hosts:
            assert evaluate_element(prod, h) == evaluate(g1, h) * evaluate(g2, h)


def test_commutative_associative():
    gs = small_graphs(2)
    for a, b in itertools.product(gs, repeat=2):
        assert basis(a) * basis(b) == basis(b) * basis(a)
    for a, b, c in itertools.product(gs[:3], repeat=3):
        A, B, C = basis(a), basis(b), basis(c)
        assert (A * B) * C == A * (B * C)


def test_unit_law():
    for g in small_graphs(3):
        assert ONE * basis(g) == basis(g)


def test_filtration_of_product():
    gs = small_graphs(3)
    for g1, g2 in itertools.combinations_with_replacement(gs, 2):
        union = disjoint_union(g1, g2)
        prod = basis(g1) * basis(g2)
        for G, c in prod.items():
            assert G.node_count <= g1.node_count + g2.node_count
            assert G.edge_count <= g1.edge_count + g2.edge_count
            assert component_count(G) <= component_count(g1) + component_count(g2)
            top = (
                G.node_count == union.node_count
                and G.edge_count == union.edge_count
                and component_count(G) == component_count(union)
            )
            assert top == (G == union)
        if is_connected(g1) and is_connected(g2):
            assert prod[union] == (2 if g1 == g2 else 1)


def test_product_node_limit():
    with config.limits(max_nodes=5):
        with pytest.raises(CapacityError):
            basis(named("K3")) * basis(named("K3"))


def test_scalar_arithmetic():
    a = M((1, "K2"))
    assert (a - 1) == HopfElement({named("K2"): 1, EMPTY: -1})
    assert (3 * a / 6)[named("K2")] == Fraction(1, 2)
    assert counit(3 * ONE + 2 * M((1, "K3"))) == 3
    assert counit(ONE) == 1
    assert counit(a) == 0


def test_coproduct_displays():
    K3, K2, P3 = named("K3"), named("K2"), named("P3")
    assert coproduct(basis(K3)) == TensorElement({(K3, EMPTY): 1, (EMPTY, K3): 1})
    two = named("2K2")
    assert coproduct(basis(two)) == TensorElement({(two, EMPTY): 1, (K2, K2): 1, (EMPTY, two): 1})
    G = named("P3+K2")
    assert coproduct(basis(G)) == TensorElement(
        {(G, EMPTY): 1, (P3, K2): 1, (K2, P3): 1, (EMPTY, G): 1}
    )


def test_coproduct_coassociative_cocommutative():
    gs = [named(n) for n in ["3K2", "P3+K2", "2K3"]]
    gs.append(disjoint_union(named("K2"), named("P3"), named("K3"), named("K2")))
    for G in gs:
        assert component_count(G) <= 4
        d = coproduct(basis(G))
        assert d.swap() == d
        left = {}
        for (a, b), c in d.items():
            for (x, y), e in coproduct(basis(a)).items():
                left[(x, y, b)] = left.get((x, y, b), 0) + c * e
        right = {}
        for (a, b), c in d.items():
            for (x, y), e in coproduct(basis(b)).items():
                right[(a, x, y)] = right.get((a, x, y), 0) + c * e
        assert left == right


def test_bialgebra_compatibility():
    gs = small_graphs(2) + [named("K3")]
    for g1, g2 in itertools.combinations_with_replacement(gs, 2):
        lhs = coproduct(basis(g1) * basis(g2))
        rhs = coproduct(basis(g1)) * coproduct(basis(g2))
        assert lhs == rhs


def test_primitives_are_connected():
    for G in small_graphs(4):
        assert is_primitive(G) == is_connected(G)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("2K2", M((1, "2K2"), (2, "P3"), (1, "K2"))),
        ("P3+K2", M((1, "P3+K2"), (6, "K1,3"), (6, "K3"), (4, "P4"), (4, "P3"))),
        (
            "3K2",
            M((-1, "3K2"), (-2, "P3+K2"), (-6, "K1,3"), (-6, "K3"), (-4, "P4"), (-6, "P3"), (-2, "2K2"), (-1, "K2")),
        ),
    ],
)
def test_antipode_displays(name, expected):
    assert antipode(basis(named(name))) == expected


def test_antipode_axioms():
    for G in small_graphs(4):
        S = antipode(basis(G))
        if is_connected(G):
            assert S == -basis(G)
        assert antipode(S) == basis(G)
        d = coproduct(basis(G))
        assert fold(tensor_map(d, left=antipode)) == counit(basis(G)) * ONE
        assert fold(tensor_map(d, right=antipode)) == ZERO
    assert antipode(ONE) == ONE


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, ONE),
        (1, M((1, "K2"))),
        (2, M((1, "P3"), (1, "2K2"))),
        (3, M((1, "K3"), (1, "K1,3"), (1, "P4"), (1, "P3+K2"), (1, "3K2"))),
    ],
)
def test_binomial_displays(n, expected):
    assert binomial_of_edge(n) == expected


@pytest.mark.parametrize("n", [4, 5])
def test_binomial_sums_all_graphs(n):
    assert binomial_of_edge(n) == HopfElement((g, 1) for g in generate_by_edges(n))


def test_binomial_limit():
    with config.limits(max_edges=3):
        with pytest.raises(CapacityError):
            binomial_of_edge(4)


def test_evaluate_element_examples():
    K2, K3 = basis(named("K2")), named("K3")
    assert evaluate_element(K2 * K2, K3) == 9
    assert evaluate_element(ONE, K3) == 1
    assert evaluate_element(binomial_of_edge(2), K3) == 3


def test_connected_generation():
    for G in small_graphs(4):
        poly = connected_polynomial(G)
        for mono in poly:
            assert all(is_connected(c) for c in mono)
        assert evaluate_polynomial(poly) == basis(G)


def test_two_disjoint_edges_from_connected():
    # M_2K2 = (M_K2^2 - M_K2 - 2 M_P3) / 2
    K2, P3 = named("K2"), named("P3")
    poly = connected_polynomial(named("2K2"))
    assert poly == {(K2, K2): Fraction(1, 2), (K2,): Fraction(-1, 2), (P3,): -1}


def test_json_round_trip():
    a = antipode(basis(named("3K2"))) + Fraction(2, 3) * basis(named("C4"))
    assert element_from_json(element_to_json(a)) == a
    t = coproduct(basis(named("P3+K2")))
    assert tensor_from_data(tensor_to_data(t)) == t
    assert '"coeff": "2/3"' in element_to_json(a)
