from __future__ import annotations

import pytest

from ugqsym import config
from ugqsym.enumeration import (
    connected_edge_counts,
    connected_node_counts,
    euler_transform,
    filter_connected,
    generate_by_edges,
    generate_by_nodes,
    generate_naive_by_edges,
    generate_naive_by_nodes,
    graph_edge_counts,
    graph_node_counts,
)
from ugqsym.errors import CapacityError
from ugqsym.graph import EMPTY, canonical, named

GRAPHS_BY_EDGES = [1, 1, 2, 5, 11, 26, 68, 177, 497]
CONNECTED_BY_EDGES = [1, 1, 1, 3, 5, 12, 30, 79, 227]
GRAPHS_BY_NODES = [1, 1, 2, 4, 11, 34, 156, 1044]
CONNECTED_BY_NODES = [1, 1, 1, 2, 6, 21, 112, 853]


def test_small_edge_levels():
    assert generate_by_edges(0) == [EMPTY]
    assert generate_by_edges(1) == [named("K2")]
    assert set(generate_by_edges(2)) == {named("P3"), named("2K2")}
    assert set(generate_by_edges(3)) == {named(n) for n in ["K3", "K1,3", "P4", "P3+K2", "3K2"]}


def test_small_node_levels():
    assert generate_by_nodes(0) == [EMPTY]
    assert generate_by_nodes(1) == [EMPTY]
    assert set(generate_by_nodes(3)) == {EMPTY, named("K2"), named("P3"), named("K3")}
    assert len(generate_by_nodes(4)) == 11


@pytest.mark.parametrize("m", range(9))
def test_edge_counts(m):
    gs = generate_by_edges(m)
    assert len(gs) == GRAPHS_BY_EDGES[m]
    if m:
        assert len(filter_connected(gs)) == CONNECTED_BY_EDGES[m]


def test_node_counts():
    assert graph_node_counts(7) == GRAPHS_BY_NODES
    assert connected_node_counts(7) == CONNECTED_BY_NODES


def test_generated_graphs_are_canonical_and_distinct():
    for gs in [generate_by_edges(6), generate_by_nodes(6)]:
        assert len(set(gs)) == len(gs)
        assert all(canonical(g) == g for g in gs)
        assert gs == sorted(gs)


def test_generation_deterministic():
    assert generate_by_edges(5) == generate_by_edges(5)


@pytest.mark.parametrize("m", range(6))
def test_orderly_matches_naive_by_edges(m):
    assert generate_by_edges(m) == generate_naive_by_edges(m)


@pytest.mark.parametrize("n", range(6))
def test_orderly_matches_naive_by_nodes(n):
    assert generate_by_nodes(n) == generate_naive_by_nodes(n)


def test_nodes_partition_by_edges():
    by_nodes = generate_by_nodes(5)
    for m in range(0, 11):
        layer = [g for g in by_nodes if g.edge_count == m]
        if m <= 8:
            assert layer == [g for g in generate_by_edges(m) if g.node_count <= 5]
        else:
            assert len(layer) == len([g for g in by_nodes if g.edge_count == 10 - m])


def test_limits():
    with pytest.raises(CapacityError):
        generate_by_edges(9)
    with pytest.raises(CapacityError):
        generate_by_nodes(8)
    with config.limits(max_gen_nodes=3):
        with pytest.raises(CapacityError):
            generate_by_nodes(4)


def test_euler_transform_examples():
    assert euler_transform(CONNECTED_BY_EDGES, 8) == GRAPHS_BY_EDGES
    assert euler_transform(CONNECTED_BY_NODES, 7) == GRAPHS_BY_NODES
    assert euler_transform([0, 1, 0, 0, 0, 0], 5) == [1] * 6


def test_euler_transform_partitions():
    # all-ones input counts integer partitions
    assert euler_transform([0] + [1] * 10, 10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_euler_transform_short_input():
    with pytest.raises(ValueError):
        euler_transform([1, 1], 3)


def test_count_helpers():
    assert graph_edge_counts(5) == GRAPHS_BY_EDGES[:6]
    assert connected_edge_counts(5) == CONNECTED_BY_EDGES[:6]
    assert connected_node_counts(1) == [1, 1]
