"""Cycle and path enumeration checked against networkx where it overlaps."""

import random
from itertools import combinations
from math import comb, factorial

import networkx as nx
import pytest

from glcycles.errors import ValidationError
from glcycles.graphs import (Graph, canonical_cycle, canonical_edge,
                             corridors, cycle_edges, cycle_from_edges,
                             disjoint_set_paths, enumerate_a_paths,
                             enumerate_cycles, path_edges,
                             vertex_disjoint_paths)


def complete(n):
    return Graph(range(n), combinations(range(n), 2))


def nx_cycle_set(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return {canonical_cycle(c) for c in nx.simple_cycles(h)}


def test_canonical_edge_and_cycle():
    assert canonical_edge(2, 1) == (1, 2)
    assert canonical_cycle((3, 1, 2)) == canonical_cycle((1, 2, 3))
    assert canonical_cycle((1, 3, 2)) == canonical_cycle((2, 3, 1))


def test_path_and_cycle_edges():
    assert path_edges((1, 2, 3)) == [(1, 2), (2, 3)]
    assert set(cycle_edges((1, 2, 3))) == {(1, 2), (2, 3), (1, 3)}


def test_graph_is_canonicalized():
    g = Graph([3, 1], [(2, 1), (1, 2), (3, 2)])
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3))
    assert g.degree(2) == 2
    assert g.neighbors(2) == (1, 3)


def test_components_and_connectivity():
    g = Graph([9], [(1, 2), (2, 3), (4, 5)])
    comps = {frozenset(c) for c in g.components()}
    assert comps == {frozenset({1, 2, 3}), frozenset({4, 5}), frozenset({9})}
    assert not g.is_connected()
    assert g.subgraph({1, 2, 3}).is_connected()


def test_bfs_path_respects_forbidden():
    g = Graph(edges=[(1, 2), (2, 3), (1, 4), (4, 3)])
    assert g.bfs_path(1, 3) in ((1, 2, 3), (1, 4, 3))
    assert g.bfs_path(1, 3, forbidden={2}) == (1, 4, 3)
    assert g.bfs_path(1, 3, forbidden={2, 4}) is None


def test_k4_has_seven_cycles():
    cycles, truncated = enumerate_cycles(complete(4))
    assert not truncated
    assert len(cycles) == 7
    assert {canonical_cycle(c) for c in cycles} == nx_cycle_set(complete(4))


def test_complete_graph_counts_match_closed_form():
    # number of k-cycles in K_n is C(n, k) * (k-1)! / 2
    for n in (5, 6):
        cycles, _ = enumerate_cycles(complete(n))
        expected = sum(comb(n, k) * factorial(k - 1) // 2
                       for k in range(3, n + 1))
        assert len(cycles) == expected


def test_grid_four_by_four_cycle_count():
    g4 = nx.grid_2d_graph(4, 4)
    g = Graph(g4.nodes, g4.edges)
    cycles, _ = enumerate_cycles(g)
    assert len(cycles) == 213
    assert {canonical_cycle(c) for c in cycles} == nx_cycle_set(g)


def test_random_graphs_agree_with_networkx():
    rng = random.Random(7)
    for _ in range(12):
        n = rng.randrange(4, 8)
        es = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(range(n), es)
        cycles, _ = enumerate_cycles(g)
        assert {canonical_cycle(c) for c in cycles} == nx_cycle_set(g)
        assert len({canonical_cycle(c) for c in cycles}) == len(cycles)


def test_enumeration_bounds():
    cycles, truncated = enumerate_cycles(complete(5), max_count=3)
    assert truncated and len(cycles) == 3
    short, _ = enumerate_cycles(complete(5), max_len=3)
    assert all(len(c) == 3 for c in short)
    assert len(short) == comb(5, 3)


def test_a_paths_on_k4():
    g = complete(4)
    paths, truncated = enumerate_a_paths(g, {0, 1})
    assert not truncated
    # direct edge, one 2-step detour per outside vertex, one 3-step path each way
    assert (0, 1) in paths
    assert (0, 2, 1) in paths and (0, 3, 1) in paths
    assert (0, 2, 3, 1) in paths and (0, 3, 2, 1) in paths
    assert len(paths) == 5
    for p in paths:
        assert p[0] in {0, 1} and p[-1] in {0, 1}
        assert all(v not in {0, 1} for v in p[1:-1])


def test_corridors_of_subdivided_k4():
    # K4 with edge (0, 1) subdivided twice; plain edges are trivial corridors
    base = [e for e in combinations(range(4), 2) if e != (0, 1)]
    g = Graph(edges=base + [(0, "a"), ("a", "b"), ("b", 1)])
    cs = corridors(g)
    assert (0, "a", "b", 1) in cs
    assert sorted(p for p in cs if len(p) == 2) == base
    assert len(cs) == 6


def test_vertex_disjoint_paths_k4():
    g = complete(4)
    paths = vertex_disjoint_paths(g, 0, 3, 3)
    assert len(paths) == 3
    inner = [set(p[1:-1]) for p in paths]
    for a, b in combinations(inner, 2):
        assert not a & b


def test_disjoint_set_paths():
    g = Graph(edges=[(0, 2), (1, 3), (2, 4), (3, 5)])
    paths = disjoint_set_paths(g, {0, 1}, {4, 5}, 2)
    assert len(paths) == 2
    used = set()
    for p in paths:
        assert p[0] in {0, 1} and p[-1] in {4, 5}
        assert not used & set(p)
        used |= set(p)
    with pytest.raises(ValidationError):
        disjoint_set_paths(g, {0}, {0, 4}, 1)


def test_cycle_from_edges_round_trip():
    cyc = (0, 1, 2, 3)
    assert cycle_from_edges(cycle_edges(cyc)) == canonical_cycle(cyc)
    with pytest.raises(ValidationError):
        cycle_from_edges([(0, 1), (1, 2)])
