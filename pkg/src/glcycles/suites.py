"""Named verification suites behind one registry.

Every suite is a bounded sweep, exhaustive where the space is small and
seeded where it is not, returning a SuiteResult whose violations list is
empty exactly when nothing failed.  Violation entries hold the parameters
needed to rebuild the failing case by hand.  Bound keys are taken from the
generic caps (max_order, max_len, max_cycles, n, c, t, seed); each suite
documents how it reads them.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from itertools import product as iproduct
from typing import Callable, Mapping

from .errors import PropertyViolation, ValidationError
from .graphs import Graph, enumerate_cycles, path_edges, vkey
from .groups import (AvoidSets, GroupElement, GroupSpec,
                     omega_avoiding_coefficients, ramsey_homogeneous_subset,
                     vector_sum_select, verify_ap_theorem,
                     verify_small_good_sequences)
from .labelling import (LabelledGraph, non_zero_t_path_from_cycle,
                        normalize_on_subdivision, reroute_path, shift,
                        vertex_to_edge_labelling, vertex_value_of_cycle,
                        encode_intersection_constraint)
from .obstructions import (canonical_complete_instance, escher_wall,
                           grid_obstruction, literal_agreement,
                           modular_grid_obstruction, stacked_interval_instance,
                           verify_complete_obstruction, verify_escher,
                           verify_grid_obstruction, verify_modular_grid)
from .packing import (PackingFunctionView, packing_function_audit,
                      separate_handle_families, tangle_from_hitting_set)
from .walls import (elementary_wall, handle_endpoint_candidates, link_handles,
                    nail_cut_bound, verify_rowcol_invariant)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checked: int
    violations: list
    details: dict

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"suite": self.suite, "checked": self.checked,
                "passed": self.passed, "violations": self.violations,
                "details": self.details}


def _bound(bounds: Mapping, key: str, default: int) -> int:
    value = bounds.get(key)
    return default if value is None else int(value)


# ---------------------------------------------------------------------------
# group lemma sweeps

def _suite_smallgoodset(bounds: Mapping) -> SuiteResult:
    """Sequences without low-order repeats are good.  max_order caps the
    group order, max_len the sequence length."""
    rep = verify_small_good_sequences(_bound(bounds, "max_order", 8),
                                      _bound(bounds, "max_len", 5))
    return SuiteResult("smallgoodset", rep["checked"], rep["violations"],
                       {"skipped": rep["skipped"]})


def _suite_ap_theorem(bounds: Mapping) -> SuiteResult:
    """k progressions covering 2^k consecutive integers cover all of them;
    at window 2^k - 1 a counterexample family must exist.  max_order caps
    the family size k, max_len caps the stride."""
    k_max = _bound(bounds, "max_order", 3)
    stride = _bound(bounds, "max_len", 6)
    checked = 0
    violations = []
    per_k = []
    for k in range(1, k_max + 1):
        full = verify_ap_theorem(k, stride)
        checked += full["families_checked"]
        for ce in full["counterexamples"]:
            violations.append({"k": k, "window": full["window"], **ce})
        tight = verify_ap_theorem(k, stride, window=2 ** k - 1)
        checked += tight["families_checked"]
        if not tight["counterexamples"]:
            violations.append({"k": k, "window": 2 ** k - 1,
                               "missing_tightness_witness": True})
        per_k.append({"k": k, "families": full["families_checked"],
                      "tight_witness": (tight["counterexamples"][:1]
                                        or [None])[0]})
    return SuiteResult("ap-theorem", checked, violations, {"per_k": per_k})


def _integer_witness(seq, avoid):
    """First positive-coefficient combination that avoids, searched over a
    full period per element; None when no combination ever avoids."""
    ranges = []
    for g in seq:
        order = g.order()
        ranges.append(range(1, (order if order is not math.inf else 1) + 1))
    for combo in iproduct(*ranges):
        s = avoid.spec.zero
        for c, g in zip(combo, seq):
            s = s + g.scale(c)
        if avoid.allows(s):
            return combo
    return None


def _avoid_options(n_i: int, cap: int):
    opts = [frozenset()]
    opts += [frozenset({a}) for a in range(n_i)]
    if cap >= 2 and n_i >= 3:
        opts += [frozenset(p) for p in combinations(range(n_i), 2)]
    return opts


def _suite_omega_coefficients(bounds: Mapping) -> SuiteResult:
    """Whenever any positive combination avoids, coefficients inside the
    box [1..2^(m*omega)] avoid too.  max_order caps the cyclic orders,
    max_len the number of elements combined."""
    top = _bound(bounds, "max_order", 5)
    t_max = _bound(bounds, "max_len", 2)
    specs = [(n,) for n in range(2, top + 1)]
    specs += [(2, 2), (2, 3), (3, 3), (2, top), (top, top)]
    seen = set()
    checked = skipped = 0
    violations = []
    for moduli in specs:
        if moduli in seen or any(n < 2 for n in moduli):
            continue
        seen.add(moduli)
        spec = GroupSpec(moduli)
        elems = list(spec.elements())
        # keep two-element avoid sets off the larger two-factor sweeps
        caps = [2 if (len(moduli) == 1 or n_i <= 3) else 1 for n_i in moduli]
        for omega_sets in iproduct(*[_avoid_options(n_i, cap)
                                     for n_i, cap in zip(moduli, caps)]):
            avoid = AvoidSets.make(spec, omega_sets)
            for t in range(1, t_max + 1):
                for seq in iproduct(elems, repeat=t):
                    witness = _integer_witness(seq, avoid)
                    if witness is None:
                        skipped += 1
                        continue
                    checked += 1
                    try:
                        omega_avoiding_coefficients(seq, avoid, witness)
                    except PropertyViolation:
                        violations.append({
                            "moduli": list(moduli),
                            "omega": [sorted(s) for s in omega_sets],
                            "elements": [list(g.coords) for g in seq],
                            "witness": list(witness)})
    return SuiteResult("omega-coefficients", checked, violations,
                       {"skipped_no_witness": skipped,
                        "specs": sorted(list(m) for m in seen)})


def _suite_vector_sum(bounds: Mapping) -> SuiteResult:
    """One element per set can always be chosen so the shifted total avoids,
    given sets larger than m*omega with a per-factor injective set."""
    checked = skipped = 0
    violations = []

    def run(spec, sets, avoid, h):
        nonlocal checked, skipped
        try:
            choice = vector_sum_select(sets, avoid, h)
        except ValidationError:
            skipped += 1
            return
        except PropertyViolation:
            violations.append({
                "moduli": list(spec.moduli),
                "sets": [[list(g.coords) for g in s] for s in sets],
                "omega": [sorted(x for x in s) for s in avoid.omega],
                "h": list(h.coords)})
            return
        checked += 1
        total = h
        for g in choice:
            total = total + g
        if not avoid.allows(total):
            violations.append({"moduli": list(spec.moduli),
                               "bad_choice": [list(g.coords) for g in choice]})

    for n in (3, 4, 5):
        spec = GroupSpec((n,))
        elems = list(spec.elements())
        for w in (1, 2):
            if w >= n:
                continue
            blocks = list(combinations(elems, w + 1))
            omegas = [frozenset(c) for c in combinations(range(n), w)]
            for pair in combinations_with_replacement(blocks, 2):
                for om in omegas:
                    avoid = AvoidSets.make(spec, [om])
                    for h in elems:
                        run(spec, [list(s) for s in pair], avoid, h)

    spec = GroupSpec((3, 3))
    elems = list(spec.elements())
    anchor = [spec.element((i, i)) for i in range(3)]
    omegas = [AvoidSets.make(spec, [{a}, {b}])
              for a in range(3) for b in range(3)]
    for other in combinations(elems, 3):
        for avoid in omegas:
            for h in anchor:
                run(spec, [anchor, list(other)], avoid, h)
    return SuiteResult("vector-sum", checked, violations,
                       {"skipped_preconditions": skipped})


def _rgs_patterns(n: int):
    """All set partitions of n positions as restricted growth strings."""
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(mx + 1):
            a[i] = v
            yield from rec(i + 1, max(mx, v + 1))
    yield from rec(0, 0)


def _pattern_has_subset(pattern, t: int) -> bool:
    counts = Counter(pattern)
    return len(counts) >= t or max(counts.values()) >= t


def _suite_ramsey(bounds: Mapping) -> SuiteResult:
    """Single-factor threshold (t-1)^2 + 1 for a constant-or-injective
    t-subset, tight witnesses one below it, and the promise that distinct
    projections force a distinct flag.  max_len caps the sequence length."""
    cap = _bound(bounds, "max_len", 16)
    seed = _bound(bounds, "seed", 0)
    rng = random.Random(seed)
    line = GroupSpec((0,))
    checked = 0
    violations = []
    swept = []
    for t in (2, 3, 4):
        threshold = (t - 1) ** 2 + 1
        if threshold > cap:
            swept.append({"t": t, "skipped": True, "threshold": threshold})
            continue
        for pattern in _rgs_patterns(threshold):
            checked += 1
            if not _pattern_has_subset(pattern, t):
                violations.append({"t": t, "pattern": list(pattern)})
        witness = [i // (t - 1) for i in range((t - 1) ** 2)]
        wit_seq = [line.element((b,)) for b in witness]
        if witness and ramsey_homogeneous_subset(wit_seq, t) is not None:
            violations.append({"t": t, "witness_not_tight": witness})
        for _ in range(200):
            vals = [rng.randrange(threshold) for _ in range(threshold)]
            seq = [line.element((v,)) for v in vals]
            got = ramsey_homogeneous_subset(seq, t)
            checked += 1
            expect = _pattern_has_subset(tuple(vals), t)
            if (got is not None) != expect:
                violations.append({"t": t, "sequence": vals,
                                   "search_disagrees": True})
                continue
            if got is not None:
                idx, flags = got
                chosen = [vals[i] for i in idx]
                ok = ((flags[0] == "equal" and len(set(chosen)) == 1)
                      or (flags[0] == "distinct"
                          and len(set(chosen)) == len(chosen)))
                if not ok:
                    violations.append({"t": t, "sequence": vals,
                                       "bad_flags": list(flags)})
        swept.append({"t": t, "threshold": threshold})

    plane = GroupSpec((0, 0))
    elems = [(a, b) for a in range(2) for b in range(3)]
    for length in (3, 4):
        for sel in permutations(elems, length):
            seq = [plane.element(v) for v in sel]
            got = ramsey_homogeneous_subset(seq, 2, z_factors=(0, 1))
            checked += 1
            if got is None:
                violations.append({"z_audit": list(sel), "no_subset": True})
                continue
            _, flags = got
            if not any(flags[i] == "distinct" for i in (0, 1)):
                violations.append({"z_audit": list(sel),
                                   "flags": list(flags)})
    return SuiteResult("ramsey", checked, violations, {"thresholds": swept})


# ---------------------------------------------------------------------------
# labelling transform sweeps

_SHIFT_SPECS = ((2,), (4,), (2, 2), (0, 2))


def _two_torsion(spec: GroupSpec) -> list[GroupElement]:
    per = []
    for n in spec.moduli:
        if n != 0 and n % 2 == 0:
            per.append((0, n // 2))
        else:
            per.append((0,))
    return [spec.element(c) for c in iproduct(*per)]


def _random_element(rng: random.Random, spec: GroupSpec) -> GroupElement:
    return spec.element(tuple(
        rng.randrange(n) if n else rng.randrange(-2, 3)
        for n in spec.moduli))


def _random_graph(rng: random.Random, lo: int, hi: int) -> Graph:
    n = rng.randrange(lo, hi + 1)
    vs = list(range(n))
    es = [e for e in combinations(vs, 2) if rng.random() < 0.55]
    return Graph(vs, es)


def _suite_shifting(bounds: Mapping) -> SuiteResult:
    """Shifting by 2-torsion at a vertex keeps every cycle value; the shift
    list of a normalization replays to its output.  n caps trials."""
    trials = _bound(bounds, "n", 32)
    rng = random.Random(_bound(bounds, "seed", 0))
    checked = 0
    violations = []
    for trial in range(trials):
        spec = GroupSpec(_SHIFT_SPECS[trial % len(_SHIFT_SPECS)])
        g = _random_graph(rng, 4, 7)
        if not g.vertices:
            continue
        labels = {e: _random_element(rng, spec) for e in g.edges}
        lg = LabelledGraph.build(g, spec, labels)
        torsion = _two_torsion(spec)
        delta = rng.choice([d for d in torsion if not d.is_zero()] or torsion)
        x = rng.choice(g.vertices)
        shifted = shift(lg, x, delta)
        cycles, _ = enumerate_cycles(g)
        for c in cycles:
            checked += 1
            if lg.value_of_cycle(c) != shifted.value_of_cycle(c):
                violations.append({"trial": trial, "vertex": repr(x),
                                   "delta": list(delta.coords),
                                   "cycle": [repr(v) for v in c]})
        off = [e for e in g.edges
               if lg.label_of(*e) != shifted.label_of(*e) and x not in e]
        if off:
            violations.append({"trial": trial, "vertex": repr(x),
                               "touched_far_edges": [repr(e) for e in off]})

    spec = GroupSpec((2, 2))
    for trial in range(8):
        base = Graph(range(4), combinations(range(4), 2))
        chains = {}
        vs: list = list(base.vertices)
        edges = []
        for u, v in base.edges:
            inner = [("s", u, v, i) for i in range(rng.randrange(0, 3))]
            walk = [u] + inner + [v]
            vs += inner
            edges += list(zip(walk, walk[1:]))
            chains[(u, v)] = walk
        g = Graph(vs, edges)
        colour = {v: rng.randrange(2) for v in g.vertices}
        labels = {(u, v): spec.element(((colour[u] + colour[v]) % 2,
                                        rng.randrange(2)))
                  for u, v in g.edges}
        lg = LabelledGraph.build(g, spec, labels)
        result = normalize_on_subdivision(lg, g, factors=(0,))
        replay = lg
        for v, d in result.shifts:
            replay = shift(replay, v, d)
        checked += 1
        if any(replay.label_of(*e) != result.labelled_graph.label_of(*e)
               for e in g.edges):
            violations.append({"normalize_trial": trial,
                               "replay_mismatch": True})
        cycles, _ = enumerate_cycles(g)
        for c in cycles:
            checked += 1
            if lg.value_of_cycle(c) != result.labelled_graph.value_of_cycle(c):
                violations.append({"normalize_trial": trial,
                                   "cycle": [repr(v) for v in c]})
    return SuiteResult("shifting", checked, violations, {"trials": trials})


def _suite_vertex_encode(bounds: Mapping) -> SuiteResult:
    """Vertex labellings transfer to edge labellings with the same forbidden
    membership on every cycle and no collapse of the forbidden set."""
    trials = _bound(bounds, "n", 24)
    rng = random.Random(_bound(bounds, "seed", 0))
    pool = ((2,), (3,), (4,), (2, 2), (0,))
    checked = 0
    violations = []
    for trial in range(trials):
        spec = GroupSpec(pool[trial % len(pool)])
        g = _random_graph(rng, 4, 8)
        vertex_labels = {v: _random_element(rng, spec) for v in g.vertices}
        omega = []
        for _ in range(rng.randrange(1, 4)):
            cand = _random_element(rng, spec)
            if cand not in omega:
                omega.append(cand)
        enc = vertex_to_edge_labelling(g, vertex_labels, omega)
        if len(enc.omega) != len(omega):
            violations.append({"trial": trial, "omega_collapsed": True})
        cycles, _ = enumerate_cycles(g)
        forbidden = set(omega)
        for c in cycles:
            checked += 1
            direct = vertex_value_of_cycle(vertex_labels, c) in forbidden
            encoded = enc.in_omega(enc.labelled_graph.value_of_cycle(c))
            if direct != encoded:
                violations.append({
                    "trial": trial, "moduli": list(spec.moduli),
                    "cycle": [repr(v) for v in c],
                    "vertex_labels": {repr(v): list(e.coords)
                                      for v, e in vertex_labels.items()},
                    "omega": [list(e.coords) for e in omega]})

        s = [v for v in g.vertices if rng.random() < 0.4]
        t = rng.randrange(1, 3)
        meet = encode_intersection_constraint(g, s, t)
        for c in cycles:
            checked += 1
            if meet.is_avoiding(c) != (len(set(c) & set(s)) >= t):
                violations.append({"trial": trial, "s": [repr(v) for v in s],
                                   "t": t, "cycle": [repr(v) for v in c]})
    return SuiteResult("vertex-encode", checked, violations,
                       {"trials": trials})


# ---------------------------------------------------------------------------
# wall construction sweeps

def _disjoint_pair_families(pairs, size):
    for fam in combinations(pairs, size):
        used: set = set()
        ok = True
        for u, v in fam:
            if u in used or v in used:
                ok = False
                break
            used.update((u, v))
        if ok:
            yield fam


def _suite_pairlink(bounds: Mapping) -> SuiteResult:
    """Linked cycles contain every handle; non-zero path extraction and
    rerouting meet their postconditions on seeded gadgets."""
    rng = random.Random(_bound(bounds, "seed", 0))
    sample3 = _bound(bounds, "n", 150)
    checked = 0
    violations = []
    for c, r in ((3, 3), (4, 3)):
        wall = elementary_wall(c, r)
        elig = sorted(handle_endpoint_candidates(wall), key=vkey)
        pairs = list(combinations(elig, 2))
        top_size = 3 if c >= 4 else 2
        for size in range(1, top_size + 1):
            fams = list(_disjoint_pair_families(pairs, size))
            if size == 3 and len(fams) > sample3:
                fams = rng.sample(fams, sample3)
            for fam in fams:
                handles = [(u, ("h", i, 0), v) for i, (u, v) in enumerate(fam)]
                checked += 1
                try:
                    cyc = link_handles(wall, handles)
                except PropertyViolation as exc:
                    violations.append({"wall": [c, r],
                                       "handles": [[repr(v) for v in h]
                                                   for h in handles],
                                       "error": str(exc)})
                    continue
                cyc_vs = set(cyc)
                cyc_es = set(path_edges(tuple(cyc) + (cyc[0],)))
                for h in handles:
                    if not set(h) <= cyc_vs or not set(path_edges(h)) <= cyc_es:
                        violations.append({"wall": [c, r], "missing_handle":
                                           [repr(v) for v in h]})
                if len(set(cyc)) != len(cyc):
                    violations.append({"wall": [c, r], "cycle_not_simple": True})

    spec = GroupSpec((3,))
    hexagon = tuple(("c", i) for i in range(6))
    anchors = [("t", i) for i in range(3)]
    spokes = [(("c", 2 * i), ("a", i), ("t", i)) for i in range(3)]
    for trial in range(30):
        edges = list(zip(hexagon, hexagon[1:] + hexagon[:1]))
        for p in spokes:
            edges += list(zip(p, p[1:]))
        g = Graph(hexagon + tuple(v for p in spokes for v in p[1:]), edges)
        labels = {e: _random_element(rng, spec) for e in g.edges}
        lg = LabelledGraph.build(g, spec, labels)
        if lg.value_of_cycle(hexagon).is_zero():
            e0 = path_edges(hexagon[:2])[0]
            bumped = dict(labels)
            bumped[e0] = bumped[e0] + spec.element((1,))
            lg = LabelledGraph.build(g, spec, bumped)
        checked += 1
        try:
            piece = non_zero_t_path_from_cycle(lg, hexagon, spokes, anchors)
        except PropertyViolation as exc:
            violations.append({"t_path_trial": trial, "error": str(exc)})
            continue
        ok = (len(set(piece)) == len(piece)
              and all(g.has_edge(u, v) for u, v in zip(piece, piece[1:]))
              and not lg.value_of_path(piece).is_zero()
              and piece[0] in anchors and piece[-1] in anchors
              and not any(v in anchors for v in piece[1:-1]))
        if not ok:
            violations.append({"t_path_trial": trial,
                               "bad_piece": [repr(v) for v in piece]})

    path = tuple(("p", i) for i in range(5))
    ring = tuple(("c", i) for i in range(6))
    links = [(("p", 1), ("x", 0), ("c", 0)),
             (("p", 2), ("x", 1), ("c", 2)),
             (("p", 3), ("x", 2), ("c", 4))]
    for trial in range(30):
        edges = list(zip(path, path[1:])) + list(zip(ring, ring[1:] + ring[:1]))
        for p in links:
            edges += list(zip(p, p[1:]))
        g = Graph(path + ring + tuple(p[1] for p in links), edges)
        labels = {e: _random_element(rng, spec) for e in g.edges}
        lg = LabelledGraph.build(g, spec, labels)
        if lg.value_of_cycle(ring).is_zero():
            e0 = path_edges(ring[:2])[0]
            bumped = dict(labels)
            bumped[e0] = bumped[e0] + spec.element((1,))
            lg = LabelledGraph.build(g, spec, bumped)
        checked += 1
        try:
            detour = reroute_path(lg, ring, path, links)
        except PropertyViolation as exc:
            violations.append({"reroute_trial": trial, "error": str(exc)})
            continue
        ok = (detour[0] == path[0] and detour[-1] == path[-1]
              and len(set(detour)) == len(detour)
              and all(g.has_edge(u, v) for u, v in zip(detour, detour[1:]))
              and lg.value_of_path(detour) != lg.value_of_path(path))
        if not ok:
            violations.append({"reroute_trial": trial,
                               "bad_detour": [repr(v) for v in detour]})
    return SuiteResult("pairlink", checked, violations, {})


def _suite_separating(bounds: Mapping) -> SuiteResult:
    """Row-column separation invariant, the nail cut-off bound, and family
    thinning against a disjoint non-zero anchor-path set."""
    rng = random.Random(_bound(bounds, "seed", 0))
    checked = 0
    violations = []
    sep_reports = []
    for c, r in ((3, 3), (4, 3), (3, 4)):
        rep = verify_rowcol_invariant(elementary_wall(c, r),
                                      max_separator=_bound(bounds,
                                                           "max_order", 2))
        checked += rep["separations_checked"]
        if rep["violations"]:
            violations.append({"wall": [c, r],
                               "rowcol_violations": rep["violations"]})
        sep_reports.append({"wall": [c, r], **rep})

    wall = elementary_wall(6, 6)
    verts = wall.graph.vertices
    for trial in range(_bound(bounds, "n", 120)):
        s = rng.sample(verts, rng.randrange(1, 5))
        x = rng.randrange(1, 7)
        y = rng.randrange(1, 7)
        checked += 1
        try:
            cut = nail_cut_bound(wall, s, x, y)
        except PropertyViolation:
            violations.append({"cut_set": [repr(v) for v in s],
                               "column": x, "row": y})
            continue
        if cut > len(s) ** 2:
            violations.append({"cut_set": [repr(v) for v in s],
                               "column": x, "row": y, "count": cut})

    spec = GroupSpec((3,))
    anchors = tuple(("t", i) for i in range(8))
    for trial in range(20):
        families = []
        edges = []
        labels = {}
        mid = 0
        for f in range(rng.randrange(1, 3)):
            order = rng.sample(range(8), 8)
            fam = []
            for j in range(4):
                a, b = anchors[order[2 * j]], anchors[order[2 * j + 1]]
                m = ("m", mid)
                mid += 1
                fam.append((a, m, b))
                for e in path_edges(fam[-1]):
                    edges.append(e)
                    labels[e] = (spec.element((rng.randrange(3),))
                                 if rng.random() < 0.5 else spec.zero)
            families.append(fam)
        for j in range(3):
            a, b = rng.sample(anchors, 2)
            m = ("q", j)
            p = (a, m, b)
            first, second = path_edges(p)
            edges += [first, second]
            labels[first] = spec.element((1,))
            labels[second] = spec.zero
        g = Graph(anchors, edges)
        lg = LabelledGraph.build(g, spec, labels)
        checked += 1
        try:
            out = separate_handle_families(lg, anchors, families, k=1)
        except PropertyViolation as exc:
            violations.append({"separating_trial": trial, "error": str(exc)})
            continue
        *kept, q_set = out
        q_vertices = {v for p in q_set for v in p}
        ok = (len(kept) == len(families)
              and all(len(fam) == 1 for fam in kept)
              and all(p in families[i] for i, fam in enumerate(kept)
                      for p in fam)
              and all(not lg.value_of_path(p).is_zero() for p in q_set)
              and all(set(p).isdisjoint(q_vertices)
                      for fam in kept for p in fam))
        if not ok:
            violations.append({"separating_trial": trial,
                               "bad_output": [[list(map(repr, p)) for p in fam]
                                              for fam in out]})
    return SuiteResult("separating", checked, violations,
                       {"rowcol": sep_reports})


# ---------------------------------------------------------------------------
# obstruction family suites

def _suite_escher(bounds: Mapping) -> SuiteResult:
    n = _bound(bounds, "n", 3)
    max_cycles = _bound(bounds, "max_cycles", 200000)
    violations = []
    reports = []
    checked = 0
    for length in (1, 2):
        rep = verify_escher(escher_wall(n, length), max_cycles=max_cycles)
        reports.append(rep)
        checked += rep["cycles_total"] + rep["deletion_sets_checked"]
        if not rep["pairwise_intersecting"]:
            violations.append({"n": n, "pathLength": length,
                               "disjoint_pair": rep["disjoint_pair"]})
        if not rep["every_small_deletion_survived"]:
            violations.append({"n": n, "pathLength": length,
                               "deletion_failures": rep["deletion_failures"]})
        if not rep["blocker_kills_all"]:
            violations.append({"n": n, "pathLength": length,
                               "blocker_failed": rep["blocker"]})
        if rep["max_disjoint_odd"] != 1:
            violations.append({"n": n, "pathLength": length,
                               "packing": rep["max_disjoint_odd"]})
    return SuiteResult("escher", checked, violations, {"reports": reports})


def _suite_grid3(bounds: Mapping) -> SuiteResult:
    """Checks the claims that hold for the three-border grid; the
    exactly-once hitting floor is false and reported as data, with its
    certificate, rather than asserted."""
    n = _bound(bounds, "n", 4)
    rep = verify_grid_obstruction(grid_obstruction(n),
                                  max_cycles=_bound(bounds, "max_cycles",
                                                    200000))
    violations = []
    if not rep["pairwise_intersecting"]:
        violations.append({"n": n, "disjoint_pair": rep["disjoint_pair"]})
    if not rep["tau_meeting_meets_floor"]:
        violations.append({"n": n, "tau_meeting": rep["tau_meeting"],
                           "claimed_floor": rep["claimed_floor"]})
    if rep["meeting_witness_failures"]:
        violations.append({"n": n,
                           "witness_failures": rep["meeting_witness_failures"]})
    details = {"report": rep,
               "exactly_once_floor": {
                   "claimed": rep["claimed_floor"],
                   "tau": rep["tau_exactly_once"],
                   "holds": bool(rep["tau_exactly_once_meets_floor"]),
                   "certificate": rep["tau_exactly_once_certificate"]}}
    checked = rep["cycles_total"] + rep["deletion_sets_checked"]
    return SuiteResult("grid3", checked, violations, details)


def _suite_modgrid(bounds: Mapping) -> SuiteResult:
    n = _bound(bounds, "n", 4)
    max_cycles = _bound(bounds, "max_cycles", 200000)
    rep = verify_modular_grid(modular_grid_obstruction(n),
                              max_cycles=max_cycles)
    lit = literal_agreement(3, max_cycles=max_cycles)
    violations = []
    if rep["residue_split_violations"]:
        violations.append({"n": n,
                           "residue_split": rep["residue_split_violations"]})
    if not rep["pairwise_intersecting"]:
        violations.append({"n": n, "disjoint_pair": rep["disjoint_pair"]})
    if n <= 4 and not rep["matches_exactly_once"]:
        violations.append({"n": n, "avoiding_beyond_exactly_once": True})
    for key in ("bijection", "avoiding_agree"):
        if not lit[key]:
            violations.append({"literal_check": key, "report": lit})
    if lit["value_mismatches"] or lit["avoid_mismatches"]:
        violations.append({"literal_mismatches": lit})
    checked = rep["cycles_total"] + lit["literal_cycles"]
    return SuiteResult("modgrid", checked, violations,
                       {"report": rep, "literal": lit})


def _suite_complete(bounds: Mapping) -> SuiteResult:
    c = _bound(bounds, "c", 2)
    t = _bound(bounds, "t", 1)
    d = _bound(bounds, "max_order", 5)
    max_cycles = _bound(bounds, "max_cycles", 300000)
    rep = verify_complete_obstruction(canonical_complete_instance(c, t, d),
                                      max_cycles=max_cycles)
    violations = []
    for key in ("length_bound_holds", "counting_common_vertex",
                "length_d_all_avoiding", "tau_matches", "tau_exceeds_floor",
                "survivor_is_avoiding_cycle"):
        if not rep[key]:
            violations.append({"c": c, "t": t, "d": d, "failed": key})
    if rep["direct_scan"]["ran"] and not rep["direct_scan"]["all_share"]:
        violations.append({"c": c, "t": t, "d": d, "failed": "direct_scan"})

    stacked = stacked_interval_instance(1, 1)
    srep = verify_complete_obstruction(stacked, max_cycles=max_cycles)
    floor = Fraction(2 + 1 * 1, 2)
    if not srep["tau"] > floor:
        violations.append({"stacked": [1, 1], "tau": srep["tau"],
                           "floor": str(floor)})
    for key in ("length_bound_holds", "tau_matches"):
        if not srep[key]:
            violations.append({"stacked": [1, 1], "failed": key})
    checked = rep["cycles_total"] + srep["cycles_total"]
    return SuiteResult("complete", checked, violations,
                       {"report": rep, "stacked_report": srep,
                        "stacked_floor": str(floor)})


def _suite_tangle(bounds: Mapping) -> SuiteResult:
    """Hand-built order-12 gadget: complete graph on 23 vertices, packing
    function counting floor(|C| / 12) per component, hitting set 1..12."""
    size = _bound(bounds, "n", 23)
    t = _bound(bounds, "t", 12)
    vs = list(range(1, size + 1))
    g = Graph(vs, combinations(vs, 2))

    def evaluator(h: Graph) -> int:
        if not h.vertices:
            return 0
        return sum(len(comp) // t for comp in h.components())

    view = PackingFunctionView(evaluator, f"floor-size-over-{t}")
    t_set = frozenset(range(1, t + 1))
    violations = []
    try:
        _oracle, report = tangle_from_hitting_set(g, view, t_set)
    except (PropertyViolation, ValidationError) as exc:
        return SuiteResult("tangle", 0, [{"error": str(exc)}],
                           {"size": size, "t": t})
    if report.axiom1_violations or report.axiom2_violations:
        violations.append({"axiom1": report.axiom1_violations,
                           "axiom2": report.axiom2_violations})
    audit = packing_function_audit(view, g, trials=40,
                                   seed=_bound(bounds, "seed", 0))
    if audit["monotone_violations"] or audit["additive_violations"]:
        violations.append({"packing_function_audit": audit})
    checked = (report.separations + audit["monotone_checked"]
               + audit["additive_checked"])
    return SuiteResult("tangle", checked, violations,
                       {"report": report.to_json(), "audit": audit})


SUITES: dict[str, Callable[[Mapping], SuiteResult]] = {
    "smallgoodset": _suite_smallgoodset,
    "ap-theorem": _suite_ap_theorem,
    "omega-coefficients": _suite_omega_coefficients,
    "vector-sum": _suite_vector_sum,
    "ramsey": _suite_ramsey,
    "shifting": _suite_shifting,
    "vertex-encode": _suite_vertex_encode,
    "pairlink": _suite_pairlink,
    "separating": _suite_separating,
    "escher": _suite_escher,
    "grid3": _suite_grid3,
    "modgrid": _suite_modgrid,
    "complete": _suite_complete,
    "tangle": _suite_tangle,
}


def run_suite(name: str, bounds: Mapping | None = None) -> SuiteResult:
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValidationError(f"unknown suite {name!r}; known: {known}")
    return SUITES[name](bounds or {})
