"""Packing and hitting solvers against brute-force oracles, duality reports,
packing-function views, separations, tangles, and the path searches."""

import random
from itertools import combinations

import pytest

from glcycles.errors import BoundExceeded, PropertyViolation, ValidationError
from glcycles.graphs import Graph, enumerate_cycles
from glcycles.groups import AvoidSets, GroupSpec
from glcycles.labelling import CycleFamily, LabelledGraph
from glcycles.packing import (PackingFunctionView, PackingProblem,
                              a_path_duality, cover_lemma_search,
                              duality_report, enumerate_separations,
                              family_packing_view, max_packing,
                              min_hitting_set, nu_hitting_set,
                              packing_function_audit, separate_handle_families,
                              tangle_from_hitting_set)


def k4():
    return Graph(range(4), combinations(range(4), 2))


def odd_k4():
    spec = GroupSpec((2,))
    g = k4()
    return LabelledGraph.build(g, spec, {e: spec.element((1,)) for e in g.edges},
                               AvoidSets.make(spec, [{0}]))


def random_family(seed, n):
    rng = random.Random(seed)
    spec = GroupSpec((2,))
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.6]
    g = Graph(range(n), edges)
    labels = {e: spec.element((rng.randint(0, 1),)) for e in g.edges}
    lg = LabelledGraph.build(g, spec, labels, AvoidSets.make(spec, [{0}]))
    return lg.omega_avoiding_cycles()


def oracle_packing(cycles, load):
    """Exhaustive branch on include/exclude with per-vertex load counts."""
    def rec(i, counts):
        if i == len(cycles):
            return 0
        best = rec(i + 1, counts)
        c = cycles[i]
        if all(counts.get(v, 0) < load for v in c):
            for v in c:
                counts[v] = counts.get(v, 0) + 1
            best = max(best, 1 + rec(i + 1, counts))
            for v in c:
                counts[v] -= 1
        return best
    return rec(0, {})


def oracle_hitting(cycles, verts):
    for size in range(len(verts) + 1):
        for sub in combinations(verts, size):
            if all(set(c) & set(sub) for c in cycles):
                return size
    return len(verts)


def test_packing_problem_validation():
    fam = odd_k4().omega_avoiding_cycles()
    with pytest.raises(ValidationError):
        PackingProblem(fam, 0)
    cut = CycleFamily(fam.host, fam.cycles, complete=False)
    with pytest.raises(ValidationError):
        PackingProblem(cut, 1)
    with pytest.raises(ValidationError):
        min_hitting_set(cut)


def test_solvers_match_oracles_on_random_instances():
    for seed in range(12):
        fam = random_family(seed, 6)
        cycles = list(fam.cycles)
        verts = sorted({v for c in cycles for v in c})
        for load in (1, 2):
            sol = max_packing(PackingProblem(fam, load))
            counts = {}
            for c in sol.chosen:
                for v in c:
                    counts[v] = counts.get(v, 0) + 1
            assert all(n <= load for n in counts.values())
            assert len(sol) == oracle_packing(cycles, load)
        hit = min_hitting_set(fam)
        assert all(set(c) & hit.vertices for c in cycles)
        assert len(hit) == oracle_hitting(cycles, verts)


def test_packing_monotone_in_load():
    fam = random_family(99, 7)
    sizes = [len(max_packing(PackingProblem(fam, b))) for b in (1, 2, 3)]
    assert sizes == sorted(sizes)


def test_empty_family_solutions():
    spec = GroupSpec((2,))
    g = Graph(edges=[(0, 1), (1, 2), (0, 2)])
    lg = LabelledGraph.build(g, spec, {e: spec.zero for e in g.edges},
                             AvoidSets.make(spec, [{0}]))
    fam = lg.omega_avoiding_cycles()
    assert len(fam) == 0
    assert len(max_packing(PackingProblem(fam, 1))) == 0
    assert min_hitting_set(fam).vertices == frozenset()


def test_duality_report_on_odd_k4():
    lg = odd_k4()
    rep = duality_report(lg, bounds=(1, 2))
    assert rep.family_size == 4
    assert rep.nu == {1: 1, 2: 2}
    assert rep.tau == 2
    assert len(rep.packing_certificates[2]) == 2
    # deleting the hitting certificate kills every avoiding cycle
    rest = lg.graph.without_vertices(rep.hitting_certificate)
    survivors, truncated = enumerate_cycles(rest)
    assert not truncated
    assert all(not lg.is_avoiding(c) for c in survivors)


def test_duality_report_json_shape():
    js = duality_report(odd_k4(), bounds=(2, 1, 2)).to_json()
    assert set(js) == {"family_size", "nu", "tau", "packing_certificate",
                       "hitting_certificate", "truncated"}
    assert js["nu"] == {"1": 1, "2": 2}
    assert js["truncated"] is False
    assert all(isinstance(v, str) for v in js["hitting_certificate"])


def test_family_packing_view_and_audit():
    lg = odd_k4()
    view = family_packing_view(lg.omega_avoiding_cycles(), load_bound=2)
    assert view(lg.graph) == 2
    assert view(lg.graph.without_vertices([0])) == 1
    audit = packing_function_audit(view, lg.graph, trials=40, seed=3)
    assert audit["monotone_violations"] == []
    assert audit["additive_violations"] == []
    assert audit["monotone_checked"] == 40


def test_view_rejects_bad_evaluator():
    bad = PackingFunctionView(lambda h: -1, "bad")
    with pytest.raises(PropertyViolation):
        bad(Graph([0], []))


def test_nu_hitting_set():
    view = PackingFunctionView(lambda h: len(h.vertices) // 2, "half")
    g = Graph(range(5), combinations(range(5), 2))
    assert len(nu_hitting_set(view, g)) == 4
    assert nu_hitting_set(view, Graph([0], [])) == frozenset()
    with pytest.raises(BoundExceeded):
        nu_hitting_set(view, g, max_work=2)


def test_enumerate_separations_path_graph():
    g = Graph([0, 1, 2], [(0, 1), (1, 2)])
    seps = enumerate_separations(g, 1)
    # empty separator: 2; cutting an endpoint: 2 each; cutting the middle: 4
    assert len(seps) == 10
    assert all(len(a & b) <= 1 for a, b in seps)
    pairs = set(seps)
    assert all((b, a) in pairs for a, b in seps)


def test_tangle_on_complete_graph():
    n, t = 13, 7
    g = Graph(range(n), combinations(range(n), 2))
    view = PackingFunctionView(
        lambda h: sum(len(c) // t for c in h.components()) if h.vertices else 0,
        f"floor-size-over-{t}")
    oracle, rep = tangle_from_hitting_set(g, view, range(t))
    assert (rep.t, rep.order) == (t, 2)
    assert rep.separations == 28
    assert rep.members == 14
    assert rep.axiom1_violations == 0 and rep.axiom2_violations == 0
    assert rep.minimum_check == "exact"
    assert rep.deficiency_check == "structural"
    everything = frozenset(range(n))
    assert oracle(frozenset(), everything)
    assert not oracle(everything, frozenset())
    with pytest.raises(ValidationError):
        oracle(frozenset([0]), everything - {0, 1})
    with pytest.raises(ValidationError):
        oracle(frozenset(range(6)), everything - frozenset(range(6)))


def test_tangle_rejects_bad_hitting_sets():
    n, t = 13, 7
    g = Graph(range(n), combinations(range(n), 2))
    view = PackingFunctionView(
        lambda h: sum(len(c) // t for c in h.components()) if h.vertices else 0,
        "floor")
    with pytest.raises(ValidationError):
        tangle_from_hitting_set(g, view, range(6))
    with pytest.raises(ValidationError):
        tangle_from_hitting_set(g, view, range(8))
    with pytest.raises(ValidationError):
        tangle_from_hitting_set(g, view, [0, 1, 99])


def test_a_path_duality_on_odd_k4():
    lg = odd_k4()
    rep = a_path_duality(lg, range(4), k=2)
    # with every vertex an anchor the candidates are single edges
    assert rep["non_zero_paths"] == 6
    assert rep["packing"] == 2
    assert rep["hitting"] == 3
    assert rep["bound"] == 800
    assert rep["bound_holds"] is True


def test_a_path_duality_trivial_labelling():
    spec = GroupSpec((2,))
    g = k4()
    lg = LabelledGraph.build(g, spec, {e: spec.zero for e in g.edges})
    rep = a_path_duality(lg, range(4), k=1)
    assert rep["non_zero_paths"] == 0
    assert rep["packing"] == 0
    assert rep["hitting_certificate"] == []
    assert rep["bound_holds"] is True


def test_cover_search_finds_a_path():
    lg = odd_k4()
    view = family_packing_view(lg.omega_avoiding_cycles(), load_bound=1)
    rep = cover_lemma_search(lg, [0, 1], view, range(4), k=1, u=1)
    assert rep["gate_50k4"] is False
    assert all(h["holds"] for h in rep["hypotheses"].values())
    assert rep["found"] is not None
    path = rep["found"][0]
    assert path[0] in (0, 1) and path[-1] in (0, 1)
    assert not lg.value_of_path(path).is_zero()


def test_cover_search_reports_zero_cycle_witness():
    # one even triangle in the family breaks the minimal-subgraph hypothesis
    spec = GroupSpec((2,))
    g = k4()
    labels = {e: spec.zero for e in g.edges}
    labels[(0, 1)] = spec.element((1,))
    lg = LabelledGraph.build(g, spec, labels, AvoidSets.make(spec, [set()]))
    view = family_packing_view(lg.omega_avoiding_cycles(), load_bound=1)
    rep = cover_lemma_search(lg, [0, 1], view, range(4), k=1, u=1)
    hyp = rep["hypotheses"]["minimal_positive_is_nonzero_cycle"]
    assert hyp["holds"] is False
    zero = hyp["witness"]
    assert len(zero) == 3 and (0, 1) != tuple(sorted(zero)[:2])
    assert "minimal_positive_is_nonzero_cycle" in rep["failed"]
    assert rep["found"] is None


def star_gadget(seed):
    """Eight anchors, one family of four length-2 anchor paths, and three
    candidate detour middles with one non-zero option."""
    rng = random.Random(seed)
    spec = GroupSpec((3,))
    anchors = [("t", i) for i in range(8)]
    order = anchors[:]
    rng.shuffle(order)
    edges, labels, family = [], {}, []
    for i in range(4):
        a, b, mid = order[2 * i], order[2 * i + 1], ("m", i)
        for e in ((a, mid), (mid, b)):
            edges.append(e)
            labels[e] = spec.element((rng.randint(0, 2),))
        family.append((a, mid, b))
    for j in range(3):
        q = ("q", j)
        e1, e2 = (anchors[0], q), (q, anchors[1])
        edges.extend([e1, e2])
        labels[e1] = spec.element((1,)) if j == 0 else spec.zero
        labels[e2] = spec.zero
    g = Graph(anchors + [("m", i) for i in range(4)]
              + [("q", j) for j in range(3)], edges)
    lg = LabelledGraph.build(g, spec, labels)
    return lg, anchors, [family]


def test_separate_handle_families_postconditions():
    for seed in range(8):
        lg, anchors, families = star_gadget(seed)
        out = separate_handle_families(lg, anchors, families, k=1)
        kept, q = out[0], out[-1][0]
        assert len(kept) == 1
        assert kept[0] in families[0]
        assert not lg.value_of_path(q).is_zero()
        assert not set(q) & set(kept[0])


def test_separate_handle_families_validates_shape():
    lg, anchors, families = star_gadget(0)
    short = [families[0][:3]]
    with pytest.raises(ValidationError):
        separate_handle_families(lg, anchors, short, k=1)
    shared = [families[0][:3] + [families[0][2]]]
    with pytest.raises(ValidationError):
        separate_handle_families(lg, anchors, shared, k=1)
