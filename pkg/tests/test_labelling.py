"""Labelled-graph values, shifting, normalization, and path surgery."""

from itertools import combinations

import pytest

from glcycles.errors import PropertyViolation, ValidationError
from glcycles.graphs import Graph, corridors, cycle_edges, enumerate_cycles
from glcycles.groups import AvoidSets, GroupSpec
from glcycles.labelling import (CycleFamily, LabelledGraph, bipartite_witness,
                                cycle_space_labelling,
                                encode_intersection_constraint,
                                even_subgraph_phi_value, fundamental_cycles,
                                is_gamma_bipartite, non_zero_t_path_from_cycle,
                                normalize_on_subdivision,
                                project_labelled_graph, reroute_path, shift,
                                vertex_to_edge_labelling,
                                vertex_value_of_cycle)


def k4():
    return Graph(range(4), combinations(range(4), 2))


def odd_k4():
    spec = GroupSpec((2,))
    g = k4()
    return LabelledGraph.build(g, spec, {e: spec.element((1,)) for e in g.edges},
                               AvoidSets.make(spec, [{0}]))


def test_cycle_value_is_unsigned_edge_sum():
    spec = GroupSpec((5,))
    g = Graph(edges=[(0, 1), (1, 2), (0, 2)])
    labels = {(0, 1): spec.element((1,)), (1, 2): spec.element((2,)),
              (0, 2): spec.element((3,))}
    lg = LabelledGraph.build(g, spec, labels)
    assert lg.value_of_cycle((0, 1, 2)).coords == (1,)
    assert lg.value_of_cycle((2, 1, 0)).coords == (1,)
    assert lg.value_of_path((0, 1, 2)).coords == (3,)


def test_build_requires_every_edge_labelled():
    spec = GroupSpec((2,))
    g = k4()
    with pytest.raises(ValidationError):
        LabelledGraph.build(g, spec, {(0, 1): spec.zero})


def test_avoiding_and_enumeration():
    lg = odd_k4()
    fam = lg.omega_avoiding_cycles()
    assert fam.complete
    assert len(fam) == 4                      # the four triangles
    assert all(len(c) == 3 for c in fam.cycles)
    assert len(lg.all_cycles()) == 7


def test_labelled_graph_json_round_trip():
    spec = GroupSpec((3, 0))
    g = Graph(edges=[((1, 1), "x"), ("x", 2), (2, (1, 1))])
    labels = {e: spec.element((1, -2)) for e in g.edges}
    lg = LabelledGraph.build(g, spec, labels,
                             AvoidSets.make(spec, [{0}, {4}]))
    again = LabelledGraph.from_json(lg.to_json())
    assert again.graph.edges == lg.graph.edges
    assert again.spec == lg.spec
    assert again.avoid == lg.avoid
    for e in g.edges:
        assert again.label_of(*e) == lg.label_of(*e)


def test_shift_preserves_cycle_values():
    lg = odd_k4()
    delta = lg.spec.element((1,))
    shifted = shift(lg, 0, delta)
    for c in enumerate_cycles(lg.graph)[0]:
        assert shifted.value_of_cycle(c) == lg.value_of_cycle(c)
    assert shifted.label_of(0, 1) == lg.label_of(0, 1) + delta
    assert shifted.label_of(2, 3) == lg.label_of(2, 3)


def test_shift_rejects_non_involution():
    spec = GroupSpec((3,))
    g = Graph(edges=[(0, 1)])
    lg = LabelledGraph.build(g, spec, {(0, 1): spec.zero})
    with pytest.raises(ValidationError):
        shift(lg, 0, spec.element((1,)))   # 2 * 1 != 0 in Z3


def test_bipartite_witness_on_cut_labelling():
    spec = GroupSpec((2,))
    g = k4()
    side = {0: 0, 1: 1, 2: 0, 3: 1}
    labels = {(u, v): spec.element(((side[u] + side[v]) % 2,))
              for u, v in g.edges}
    lg = LabelledGraph.build(g, spec, labels)
    assert is_gamma_bipartite(lg)
    odd = odd_k4()
    w = bipartite_witness(odd)
    assert w is not None and len(w) % 2 == 1


def test_normalize_zeroes_corridors_and_replays():
    spec = GroupSpec((2, 2))
    base = [e for e in combinations(range(4), 2) if e != (0, 1)]
    g = Graph(edges=base + [(0, "a"), ("a", 1)])
    side = {v: v % 2 for v in range(4)}
    side["a"] = 0
    labels = {(u, v): spec.element(((side[u] + side[v]) % 2, 1))
              for u, v in g.edges}
    lg = LabelledGraph.build(g, spec, labels)
    res = normalize_on_subdivision(lg, g, factors=(0,))
    for p in corridors(g):
        val = res.labelled_graph.value_of_path(p)
        assert val.coords[0] == 0
    replay = lg
    for v, d in res.shifts:
        replay = shift(replay, v, d)
    for e in g.edges:
        assert replay.label_of(*e) == res.labelled_graph.label_of(*e)
    for c in enumerate_cycles(g)[0]:
        assert res.labelled_graph.value_of_cycle(c) == lg.value_of_cycle(c)


def test_normalize_rejects_non_bipartite_factor():
    lg = odd_k4()
    with pytest.raises(ValidationError):
        normalize_on_subdivision(lg, lg.graph, factors=(0,))


def test_projection_keeps_chosen_factors():
    spec = GroupSpec((2, 3))
    g = Graph(edges=[(0, 1), (1, 2), (0, 2)])
    labels = {e: spec.element((1, i)) for i, e in enumerate(g.edges)}
    lg = LabelledGraph.build(g, spec, labels,
                             AvoidSets.make(spec, [{0}, {1}]))
    proj = project_labelled_graph(lg, (1,))
    assert proj.spec.moduli == (3,)
    for e in g.edges:
        assert proj.label_of(*e).coords == (lg.label_of(*e).coords[1],)
    assert proj.avoid.omega == (frozenset({1}),)


def test_vertex_encoding_matches_direct_membership():
    spec = GroupSpec((3,))
    g = k4()
    vlabels = {v: spec.element((v % 3,)) for v in g.vertices}
    omega = [spec.element((0,)), spec.element((2,))]
    enc = vertex_to_edge_labelling(g, vlabels, omega)
    assert len(enc.omega) == 2
    for c in enumerate_cycles(g)[0]:
        direct = vertex_value_of_cycle(vlabels, c) in set(omega)
        assert enc.in_omega(enc.labelled_graph.value_of_cycle(c)) == direct


def test_intersection_constraint_encoding():
    g = Graph(edges=[(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (2, 4)])
    s = {0, 2}
    for t in (1, 2):
        lg = encode_intersection_constraint(g, s, t)
        for c in enumerate_cycles(g)[0]:
            assert lg.is_avoiding(c) == (len(set(c) & s) >= t)


def test_fundamental_cycles_span_k4():
    basis, tree_edges = fundamental_cycles(k4())
    assert len(tree_edges) == 3
    assert len(basis) == 3     # m - n + 1


def test_cycle_space_labelling_realizes_phi():
    spec = GroupSpec((4,))
    g = k4()
    basis, _ = fundamental_cycles(g)
    phi = {e: spec.element((i + 1,)) for i, e in enumerate(sorted(basis))}
    lg = cycle_space_labelling(g, phi, spec)
    for e, cyc in basis.items():
        assert lg.value_of_cycle(cyc) == phi[e]
    # an even subgraph: symmetric difference of two basis cycles
    e1, e2 = sorted(basis)[:2]
    sym = set(cycle_edges(basis[e1])) ^ set(cycle_edges(basis[e2]))
    val = even_subgraph_phi_value(g, phi, spec, sym)
    assert val == phi[e1] + phi[e2]
    assert lg.value_of_edges(sym) == val


def test_non_zero_t_path_postconditions():
    spec = GroupSpec((3,))
    ring = tuple(("c", i) for i in range(6))
    anchors = [("t", i) for i in range(3)]
    spokes = [(("c", 2 * i), ("a", i), ("t", i)) for i in range(3)]
    edges = list(zip(ring, ring[1:] + ring[:1]))
    for p in spokes:
        edges += [(p[0], p[1]), (p[1], p[2])]
    g = Graph(edges=edges)
    labels = {e: spec.zero for e in g.edges}
    labels[(("c", 0), ("c", 1))] = spec.element((1,))
    lg = LabelledGraph.build(g, spec, labels)
    piece = non_zero_t_path_from_cycle(lg, ring, spokes, anchors)
    assert piece[0] in anchors and piece[-1] in anchors
    assert not lg.value_of_path(piece).is_zero()
    assert all(v not in anchors for v in piece[1:-1])

    zero = LabelledGraph.build(g, spec, {e: spec.zero for e in g.edges})
    with pytest.raises(ValidationError):
        non_zero_t_path_from_cycle(zero, ring, spokes, anchors)


def test_reroute_changes_value():
    spec = GroupSpec((3,))
    path = tuple(("p", i) for i in range(5))
    ring = tuple(("c", i) for i in range(6))
    links = [(("p", 1), ("x", 0), ("c", 0)),
             (("p", 2), ("x", 1), ("c", 2)),
             (("p", 3), ("x", 2), ("c", 4))]
    edges = list(zip(path, path[1:])) + list(zip(ring, ring[1:] + ring[:1]))
    for p in links:
        edges += [(p[0], p[1]), (p[1], p[2])]
    g = Graph(edges=edges)
    labels = {e: spec.zero for e in g.edges}
    labels[(("c", 0), ("c", 1))] = spec.element((1,))
    lg = LabelledGraph.build(g, spec, labels)
    detour = reroute_path(lg, ring, path, links)
    assert detour[0] == path[0] and detour[-1] == path[-1]
    assert lg.value_of_path(detour) != lg.value_of_path(path)


def test_cycle_family_restriction():
    lg = odd_k4()
    fam = lg.omega_avoiding_cycles()
    sub = fam.restricted_to({0, 1, 2})
    assert len(sub) == 1
    data = fam.to_json()
    assert data["count"] == 4 and data["complete"] is True
