"""Wall kit: structure, slices, handles, and the avoiding-cycle composer."""

import pytest

from glcycles.errors import PropertyViolation, ValidationError
from glcycles.graphs import path_edges, vkey
from glcycles.groups import AvoidSets, GroupSpec
from glcycles.labelling import LabelledGraph
from glcycles.walls import (anchored_subwall, attach_handles,
                            clean_subwall_search, column_slice,
                            cycle_with_subwalls, elementary_wall,
                            handle_endpoint_candidates, is_clean_wall,
                            link_handles, nail_cut_bound,
                            omega_avoiding_cycle_from_wall, row_slice,
                            subdivide_wall, validate_handles, validate_wall,
                            verify_rowcol_invariant, wall_column, wall_row)


def first_handle(wall, i=0):
    elig = sorted(handle_endpoint_candidates(wall), key=vkey)
    return (elig[2 * i], ("h", i), elig[2 * i + 1])


def test_elementary_wall_shape():
    w = elementary_wall(3, 3)
    assert w.graph.n == 2 * 3 * 3 - 2
    assert all(2 <= w.graph.degree(v) <= 3 for v in w.graph.vertices)
    assert (1, 1) not in w.graph        # trimmed corner
    assert (6, 3) not in w.graph        # r odd trims (2c, r)
    assert w.nail_set() == frozenset(w.graph.vertices)
    with pytest.raises(ValidationError):
        elementary_wall(2, 3)


def test_rows_and_columns_cover():
    w = elementary_wall(4, 3)
    row = wall_row(w, 2)
    assert row[0][1] == 2 and row[-1][1] == 2
    assert len(row) == 2 * w.c
    col = wall_column(w, 2)
    assert all(u in w.graph for u in col)
    assert {v[1] for v in col} == set(range(1, w.r + 1))


def test_subdivide_wall_keeps_structure():
    w = elementary_wall(3, 3)
    key = next(iter(w.paths))
    sub = subdivide_wall(w, {key: 3})
    assert len(sub.paths[key]) == 4
    assert sub.graph.n == w.graph.n + 2
    validate_wall(sub)


def test_slices_are_walls_over_parent_vertices():
    w = elementary_wall(5, 4)
    cs = column_slice(w, 2, 3)
    assert (cs.wall.c, cs.wall.r) == (3, 4)
    assert set(cs.wall.graph.vertices) <= set(w.graph.vertices)
    rs = row_slice(w, 2, 3)
    assert (rs.wall.c, rs.wall.r) == (5, 3)
    assert {v[1] for v in rs.wall.nails.values()} == {2, 3, 4}
    with pytest.raises(ValidationError):
        column_slice(w, 4, 3)


def test_anchored_subwall_has_degree_three_nails():
    w = elementary_wall(5, 5)
    sub = anchored_subwall(w)
    assert (sub.c, sub.r) == (4, 3)
    for v in sub.nails.values():
        assert w.graph.degree(v) == 3
    with pytest.raises(ValidationError):
        anchored_subwall(elementary_wall(4, 4))


def test_handle_candidates_are_outer_degree_two_nails():
    w = elementary_wall(3, 3)
    for v in handle_endpoint_candidates(w):
        assert v[0] in {1, 2, 5, 6}
        assert w.graph.degree(v) == 2


def test_validate_handles_rejects_bad_endpoints():
    w = elementary_wall(3, 3)
    h = first_handle(w)
    assert validate_handles(w, [h]) == [tuple(h)]
    with pytest.raises(ValidationError):
        validate_handles(w, [((3, 2), ("h", 0), (1, 2))])   # interior nail
    with pytest.raises(ValidationError):
        validate_handles(w, [h, (h[0], ("h", 1), (6, 2))])  # shared endpoint


def test_link_handles_cycle_contains_them():
    w = elementary_wall(4, 3)
    handles = [first_handle(w, 0), first_handle(w, 1)]
    cyc = link_handles(w, handles)
    assert len(set(cyc)) == len(cyc)
    vs = set(cyc)
    es = set(path_edges(tuple(cyc) + (cyc[0],)))
    for h in handles:
        assert set(h) <= vs
        assert set(path_edges(h)) <= es


def test_cycle_with_subwalls_meets_first_rows_only():
    w = elementary_wall(7, 7)
    h = first_handle(w)
    cyc, subs = cycle_with_subwalls(w, [h], k=1, w=4)
    assert len(subs) == 1
    sub = subs[0]
    on_cycle = set(cyc)
    first_row = set(wall_row(sub, 1))
    rest = set(sub.graph.vertices) - first_row
    assert first_row <= on_cycle
    assert not rest & on_cycle
    with pytest.raises(ValidationError):
        cycle_with_subwalls(w, [h], k=2, w=4)


def test_attach_handles_adds_paths():
    w = elementary_wall(3, 3)
    h = first_handle(w)
    g = attach_handles(w, [h])
    assert g.has_edge(h[0], h[1]) and g.has_edge(h[1], h[2])
    assert g.n == w.graph.n + 1


def test_nail_cut_bound_quadratic():
    w = elementary_wall(6, 6)
    s = [(3, 3), (5, 5), (8, 2)]
    cut = nail_cut_bound(w, s, 1, 1)
    assert cut <= len(s) ** 2


def test_rowcol_invariant_small_walls():
    for c, r in ((3, 3), (4, 3)):
        rep = verify_rowcol_invariant(elementary_wall(c, r), max_separator=2)
        assert rep["violations"] == 0
        assert rep["separations_checked"] > 0


def test_clean_subwall_search_all_zero():
    w = elementary_wall(7, 7)
    spec = GroupSpec((2,))
    labels = {e: spec.zero for e in w.graph.edges}
    lg = LabelledGraph.build(w.graph, spec, labels)
    res = clean_subwall_search(lg, w, [3, 3, 3])
    assert res.z_factors == (0,)
    assert (res.subwall.c, res.subwall.r) == (3, 3)
    assert is_clean_wall(res.labelled_graph, res.subwall, res.z_factors, 5)
    with pytest.raises(ValidationError):
        clean_subwall_search(lg, w, [7, 3, 3])


def test_composer_pinned_factor():
    w = elementary_wall(3, 3)
    spec = GroupSpec((2,))
    h = first_handle(w)
    g = attach_handles(w, [h])
    lg = LabelledGraph.build(g, spec, {e: spec.zero for e in g.edges},
                             AvoidSets.make(spec, [{1}]))
    cyc = omega_avoiding_cycle_from_wall(lg, w, [h], z_factors=[0], ell=3)
    assert lg.avoid.allows(lg.value_of_cycle(cyc))
    assert set(h) <= set(cyc)


def test_composer_detour_ledger():
    # smallest wall the schedule admits for one free factor and one handle
    w = elementary_wall(13, 10)
    spec = GroupSpec((3,))
    h = first_handle(w)
    g = attach_handles(w, [h])

    def on_grid(v):
        return isinstance(v[0], int)

    labels = {}
    for e in g.edges:
        u, v = e
        hot = on_grid(u) and on_grid(v) and (u[0] + u[1] + v[0] + v[1]) % 5 == 0
        labels[e] = spec.element((1,)) if hot else spec.zero
    lg = LabelledGraph.build(g, spec, labels, AvoidSets.make(spec, [{2}]))
    cyc = omega_avoiding_cycle_from_wall(lg, w, [h], z_factors=[], ell=4)
    assert lg.avoid.allows(lg.value_of_cycle(cyc))
    assert set(h) <= set(cyc)
    assert len(set(cyc)) == len(cyc)
