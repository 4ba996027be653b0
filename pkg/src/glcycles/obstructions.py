"""Generators and verifiers for the lower-bound families.

Four families show that small hitting sets cannot always be traded for
disjoint avoiding cycles: a wall with parity-tracked crossing paths, a grid
whose top row, bottom row and left column are marked in three integer
factors, the same grid compressed into one mod-105 weight per edge, and a
uniformly labelled complete graph.  Generators are deterministic given their
parameters; verifiers enumerate exhaustively and return reports that carry
their certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .errors import BoundExceeded, PropertyViolation, ValidationError
from .graphs import (Graph, canonical_cycle, canonical_edge, cycle_edges,
                     enumerate_cycles, path_edges, vkey)
from .groups import GroupElement, GroupSpec
from .labelling import AvoidSets, CycleFamily, LabelledGraph, vertex_to_json
from .packing import PackingProblem, max_packing, min_hitting_set
from .walls import Wall, elementary_wall


@dataclass(frozen=True)
class ObstructionInstance:
    """A labelled graph together with the recipe that produced it."""

    labelled_graph: LabelledGraph
    family: str
    parameters: dict

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "parameters": dict(self.parameters),
            "labelledGraph": self.labelled_graph.to_json(),
        }


def generate(family: str, parameters: Mapping) -> ObstructionInstance:
    """Rebuild an instance from its descriptor.  Inverse of the generators."""
    if family == "escher":
        return escher_wall(parameters["n"], parameters["pathLength"])
    if family == "grid3":
        return grid_obstruction(parameters["n"])
    if family == "modGrid":
        return modular_grid_obstruction(parameters["n"])
    if family == "completeUniform":
        return canonical_complete_instance(parameters["c"], parameters["t"],
                                           parameters["d"])
    raise ValidationError(f"unknown obstruction family {family!r}")


def regenerate(instance: ObstructionInstance) -> ObstructionInstance:
    """Regenerate from stored parameters; byte-identical JSON is the contract.

    Complete-graph instances over a non-canonical group are rebuilt from the
    instance's own spec and avoid sets, everything else from parameters alone.
    """
    p = instance.parameters
    if instance.family == "completeUniform":
        lg = instance.labelled_graph
        g = lg.spec.element(tuple(p["g"]))
        return complete_graph_obstruction(p["c"], p["t"], lg.spec, g, lg.avoid)
    return generate(instance.family, p)


# ---------------------------------------------------------------------------
# shared scan helpers

def first_disjoint_pair(cycles: Sequence) -> Optional[tuple]:
    """First vertex-disjoint pair in canonical order, or None.

    Quadratic bitmask sweep; the inner loop runs at C speed, so a family of
    several thousand cycles finishes in about a second.
    """
    index: dict = {}
    masks = []
    for c in cycles:
        m = 0
        for v in c:
            bit = index.setdefault(v, len(index))
            m |= 1 << bit
        masks.append(m)
    for i, m in enumerate(masks):
        rest = masks[i + 1:]
        if 0 in map(m.__and__, rest):
            j = i + 1 + next(k for k, x in enumerate(rest) if not m & x)
            return cycles[i], cycles[j]
    return None


def _vertex_bits(graph: Graph) -> dict:
    return {v: 1 << i for i, v in enumerate(graph.vertices)}


def _enumerate_all(graph: Graph, max_cycles: int) -> list:
    cycles, truncated = enumerate_cycles(graph, max_count=max_cycles)
    if truncated:
        raise BoundExceeded(f"cycle enumeration exceeded {max_cycles}")
    return cycles


# ---------------------------------------------------------------------------
# wall with crossing paths

def _crossing_endpoint(wall: Wall, row: int, col: int) -> tuple:
    """The attachment nail where a crossing path meets row `row` in column
    `col`: prefer the degree-3 nail, break ties toward smaller x."""
    cands = [(x, row) for x in (2 * col - 1, 2 * col) if (x, row) in wall.graph]
    if not cands:
        raise PropertyViolation("escher", f"row {row} misses column {col}")
    cands.sort(key=lambda v: (wall.graph.degree(v) != 3, v[0]))
    return cands[0]


def escher_paths(n: int, path_length: int) -> list[tuple]:
    """The n crossing walks: path i runs from row 1 column i to row n
    column n+1-i, with path_length edges and fresh interior vertices."""
    wall = elementary_wall(n, n)
    walks = []
    for i in range(1, n + 1):
        a = _crossing_endpoint(wall, 1, i)
        b = _crossing_endpoint(wall, n, n + 1 - i)
        inner = tuple(("p", i, k) for k in range(1, path_length))
        walks.append((a,) + inner + (b,))
    return walks


def escher_wall(n: int, path_length: int = 1) -> ObstructionInstance:
    """An (n,n)-wall plus n disjoint crossing paths, tracked mod 2.

    Each crossing path contributes exactly 1 to a cycle's value (only its
    first edge is labelled), so with the avoid set {0} the avoiding cycles
    are exactly those traversing an odd number of crossing paths.
    """
    if n < 3:
        raise ValidationError("height must be at least 3")
    if path_length < 1:
        raise ValidationError("crossing paths need at least one edge")
    wall = elementary_wall(n, n)
    spec = GroupSpec((2,))
    one, zero = spec.element((1,)), spec.zero
    labels = {e: zero for e in wall.graph.edges}
    seen = set()
    extra = []
    for walk in escher_paths(n, path_length):
        if any(v in seen for v in walk) or len(set(walk)) != len(walk):
            raise PropertyViolation("escher", "crossing paths collide")
        if path_length == 1 and wall.graph.has_edge(walk[0], walk[-1]):
            raise PropertyViolation("escher", "crossing edge already present")
        seen.update(walk)
        es = path_edges(walk)
        extra.extend(es)
        for k, e in enumerate(es):
            labels[e] = one if k == 0 else zero
    graph = wall.graph.with_edges(extra)
    avoid = AvoidSets.make(spec, [[0]])
    lg = LabelledGraph.build(graph, spec, labels, avoid)
    return ObstructionInstance(lg, "escher",
                               {"n": n, "pathLength": path_length})


def _paths_traversed(cycle: Sequence, walk_edge_sets: Sequence[frozenset]) -> int:
    es = set(cycle_edges(cycle))
    return sum(1 for w in walk_edge_sets if w <= es)


def verify_escher(instance: ObstructionInstance,
                  max_cycles: int = 200000) -> dict:
    """Exhaustive audit: odd cycles pairwise intersect, every small deletion
    leaves a single-crossing cycle, and one larger deletion kills them all."""
    if instance.family != "escher":
        raise ValidationError("expected an escher instance")
    lg = instance.labelled_graph
    n = instance.parameters["n"]
    length = instance.parameters["pathLength"]
    cycles = _enumerate_all(lg.graph, max_cycles)
    walks = escher_paths(n, length)
    walk_edges = [frozenset(path_edges(w)) for w in walks]
    odd = [c for c in cycles if lg.is_avoiding(c)]
    singles = [c for c in odd if _paths_traversed(c, walk_edges) == 1]

    pair = first_disjoint_pair(odd)
    single_sets = [frozenset(c) for c in singles]
    vs = sorted(lg.graph.vertices, key=vkey)
    failures = []
    checked = 0
    for size in range(n):
        for s in combinations(vs, size):
            checked += 1
            ss = set(s)
            if not any(cs.isdisjoint(ss) for cs in single_sets):
                failures.append([vertex_to_json(v) for v in s])

    blocker = frozenset(w[1] if len(w) > 2 else w[0] for w in walks)
    kills_all = all(not set(c).isdisjoint(blocker) for c in odd)
    family = CycleFamily(lg, tuple(odd), complete=True)
    packing = max_packing(PackingProblem(family, load_bound=1))

    return {
        "family": "escher",
        "n": n,
        "pathLength": length,
        "cycles_total": len(cycles),
        "odd_count": len(odd),
        "single_crossing_count": len(singles),
        "pairwise_intersecting": pair is None,
        "disjoint_pair": (None if pair is None
                          else [[vertex_to_json(v) for v in c] for c in pair]),
        "deletion_sets_checked": checked,
        "deletion_failures": failures,
        "every_small_deletion_survived": not failures,
        "blocker": sorted((vertex_to_json(v) for v in blocker), key=str),
        "blocker_kills_all": kills_all,
        "max_disjoint_odd": len(packing),
    }


# ---------------------------------------------------------------------------
# grid with three marked border sets

def square_grid(n: int) -> Graph:
    vs = [(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    es = []
    for y in range(1, n + 1):
        for x in range(1, n + 1):
            if x < n:
                es.append(((x, y), (x + 1, y)))
            if y < n:
                es.append(((x, y), (x, y + 1)))
    return Graph(vs, es)


def _border_edge_sets(n: int) -> tuple[list, list, list]:
    top = [canonical_edge((x, 1), (x + 1, 1)) for x in range(1, n)]
    bottom = [canonical_edge((x, n), (x + 1, n)) for x in range(1, n)]
    left = [canonical_edge((1, y), (1, y + 1)) for y in range(1, n)]
    return top, bottom, left


def grid_obstruction(n: int) -> ObstructionInstance:
    """The n-by-n grid with top row, bottom row and left column marked in
    three integer factors.  A factor value counts that border's edges, so
    with avoid sets {0} the avoiding cycles meet all three borders."""
    if n < 3:
        raise ValidationError("grid side must be at least 3")
    g = square_grid(n)
    spec = GroupSpec((0, 0, 0))
    labels = {e: spec.zero for e in g.edges}
    for fi, border in enumerate(_border_edge_sets(n)):
        unit = spec.element(tuple(1 if i == fi else 0 for i in range(3)))
        for e in border:
            labels[e] = unit
    avoid = AvoidSets.make(spec, [[0], [0], [0]])
    lg = LabelledGraph.build(g, spec, labels, avoid)
    return ObstructionInstance(lg, "grid3", {"n": n})


def border_counts(instance: ObstructionInstance, cycle: Sequence) -> tuple:
    """(top, bottom, left) edge counts of a cycle, read off the labelling."""
    return instance.labelled_graph.value_of_cycle(cycle).coords


def exactly_once_filter(instance: ObstructionInstance,
                        cycles: Sequence) -> list:
    """The sub-family using exactly one edge of each marked border."""
    return [c for c in cycles if border_counts(instance, c) == (1, 1, 1)]


def _free_adjacent(n: int, deleted: set, coord: int) -> list[int]:
    """Indices i where lines i and i+1 (rows if coord=1 else columns) miss
    the deleted set."""
    full = [False] * (n + 2)
    for v in deleted:
        full[v[coord]] = True
    return [i for i in range(1, n) if not full[i] and not full[i + 1]]


def verify_grid_obstruction(instance: ObstructionInstance,
                            max_cycles: int = 200000) -> dict:
    """Exhaustive audit of the three-border grid.

    Checks pairwise intersection of the border-meeting cycles, computes the
    exact minimum hitting sets for both the meeting family and its
    exactly-once sub-family against the claimed (n-1)/2 floor, and sweeps
    every deletion below that floor for surviving witness cycles inside a
    free pair of adjacent rows and columns.  The exactly-once side of the
    floor fails; the report carries the certificates either way.
    """
    if instance.family != "grid3":
        raise ValidationError("expected a grid3 instance")
    lg = instance.labelled_graph
    n = instance.parameters["n"]
    cycles = _enumerate_all(lg.graph, max_cycles)
    meeting = [c for c in cycles if lg.is_avoiding(c)]
    once = exactly_once_filter(instance, meeting)

    pair = first_disjoint_pair(meeting)
    floor = Fraction(n - 1, 2)
    tau_meeting = min_hitting_set(CycleFamily(lg, tuple(meeting), True))
    tau_once = min_hitting_set(CycleFamily(lg, tuple(once), True))

    bits = _vertex_bits(lg.graph)
    meeting_masks = [sum(bits[v] for v in c) for c in meeting]
    once_masks = [sum(bits[v] for v in c) for c in once]
    col_mask = [0] * (n + 1)
    row_mask = [0] * (n + 1)
    for v in lg.graph.vertices:
        col_mask[v[0]] |= bits[v]
        row_mask[v[1]] |= bits[v]

    vs = sorted(lg.graph.vertices, key=vkey)
    checked = 0
    meeting_failures = []
    once_failures = []
    for size in range((n - 2) // 2 + 1):
        for s in combinations(vs, size):
            checked += 1
            ss = set(s)
            cols = _free_adjacent(n, ss, 0)
            rows = _free_adjacent(n, ss, 1)
            met = hit_once = False
            for i in cols:
                for j in rows:
                    u = col_mask[i] | col_mask[i + 1] | row_mask[j] | row_mask[j + 1]
                    outside = ~u
                    if not met and 0 in map(outside.__and__, meeting_masks):
                        met = True
                    if not hit_once and 0 in map(outside.__and__, once_masks):
                        hit_once = True
                    if met and hit_once:
                        break
                if met and hit_once:
                    break
            if not met:
                meeting_failures.append([vertex_to_json(v) for v in s])
            if not hit_once:
                once_failures.append([vertex_to_json(v) for v in s])

    return {
        "family": "grid3",
        "n": n,
        "cycles_total": len(cycles),
        "meeting_count": len(meeting),
        "exactly_once_count": len(once),
        "pairwise_intersecting": pair is None,
        "disjoint_pair": (None if pair is None
                          else [[vertex_to_json(v) for v in c] for c in pair]),
        "claimed_floor": str(floor),
        "tau_meeting": len(tau_meeting.vertices),
        "tau_meeting_certificate": [vertex_to_json(v)
                                    for v in sorted(tau_meeting.vertices, key=vkey)],
        "tau_meeting_meets_floor": len(tau_meeting.vertices) >= floor,
        "tau_exactly_once": len(tau_once.vertices),
        "tau_exactly_once_certificate": [
            vertex_to_json(v) for v in sorted(tau_once.vertices, key=vkey)],
        "tau_exactly_once_meets_floor": len(tau_once.vertices) >= floor,
        "deletion_sets_checked": checked,
        "meeting_witness_failures": meeting_failures,
        "exactly_once_witness_failures": len(once_failures),
        "exactly_once_first_failure": once_failures[0] if once_failures else None,
    }


# ---------------------------------------------------------------------------
# mod-105 grid

_WEIGHTS = {"top": 15, "bottom": 70, "left": 21, "other": 0}


def modular_grid_obstruction(n: int) -> ObstructionInstance:
    """The n-by-n grid with one mod-105 weight per edge: 15 on the top row,
    70 on the bottom row, 21 on the left column, 0 elsewhere.  Avoiding
    cycles are those of value exactly 1, the image of the three-border
    family under the Chinese remainder split 105 = 3 * 5 * 7."""
    if n < 3:
        raise ValidationError("grid side must be at least 3")
    g = square_grid(n)
    spec = GroupSpec((105,))
    labels = {e: spec.zero for e in g.edges}
    top, bottom, left = _border_edge_sets(n)
    for border, weight in ((top, _WEIGHTS["top"]), (bottom, _WEIGHTS["bottom"]),
                           (left, _WEIGHTS["left"])):
        unit = spec.element((weight,))
        for e in border:
            labels[e] = unit
    avoid = AvoidSets.make(spec, [[x for x in range(105) if x != 1]])
    lg = LabelledGraph.build(g, spec, labels, avoid)
    return ObstructionInstance(lg, "modGrid", {"n": n})


def modular_grid_literal(n: int) -> ObstructionInstance:
    """The same instance with subdivisions materialized: every edge becomes
    a chain whose length equals its compressed weight mod 105 (weight 0
    edges get the full 105 = 104 subdivisions plus one), every chain edge
    weighs 1.  Cycle values then equal cycle lengths mod 105."""
    if n < 3:
        raise ValidationError("grid side must be at least 3")
    base = square_grid(n)
    top, bottom, left = map(set, _border_edge_sets(n))
    spec = GroupSpec((105,))
    one = spec.element((1,))
    edges = []
    labels = {}
    for e in base.edges:
        if e in top:
            length = _WEIGHTS["top"]
        elif e in bottom:
            length = _WEIGHTS["bottom"]
        elif e in left:
            length = _WEIGHTS["left"]
        else:
            length = 105
        u, v = e
        chain = (u,) + tuple(("d", u, v, k) for k in range(1, length)) + (v,)
        for ce in path_edges(chain):
            edges.append(ce)
            labels[ce] = one
    g = Graph(base.vertices, edges)
    avoid = AvoidSets.make(spec, [[x for x in range(105) if x != 1]])
    lg = LabelledGraph.build(g, spec, labels, avoid)
    return ObstructionInstance(lg, "modGrid", {"n": n, "literal": 1})


def _contract_subdivisions(cycle: Sequence) -> tuple:
    kept = tuple(v for v in cycle if not (isinstance(v, tuple) and v
                                          and v[0] == "d"))
    return canonical_cycle(kept)


def literal_agreement(n: int = 3, max_cycles: int = 200000) -> dict:
    """Check the compressed and the materialized instance describe the same
    avoiding family under contraction of the subdivision chains."""
    compact = modular_grid_obstruction(n)
    literal = modular_grid_literal(n)
    base_cycles = _enumerate_all(compact.labelled_graph.graph, max_cycles)
    lit_cycles = _enumerate_all(literal.labelled_graph.graph, max_cycles)

    base_by_key = {canonical_cycle(c): c for c in base_cycles}
    value_mismatches = 0
    avoid_mismatches = 0
    contracted = set()
    lit_avoiding = set()
    for c in lit_cycles:
        key = _contract_subdivisions(c)
        contracted.add(key)
        base = base_by_key.get(key)
        if base is None:
            value_mismatches += 1
            continue
        lv = literal.labelled_graph.value_of_cycle(c)
        bv = compact.labelled_graph.value_of_cycle(base)
        if lv != bv:
            value_mismatches += 1
        la = literal.labelled_graph.is_avoiding(c)
        if la != compact.labelled_graph.is_avoiding(base):
            avoid_mismatches += 1
        if la:
            lit_avoiding.add(key)
    base_avoiding = {canonical_cycle(c) for c in base_cycles
                     if compact.labelled_graph.is_avoiding(c)}
    return {
        "n": n,
        "compact_cycles": len(base_cycles),
        "literal_cycles": len(lit_cycles),
        "bijection": contracted == set(base_by_key),
        "value_mismatches": value_mismatches,
        "avoid_mismatches": avoid_mismatches,
        "avoiding_agree": lit_avoiding == base_avoiding,
        "avoiding_count": len(base_avoiding),
    }


def verify_modular_grid(instance: ObstructionInstance,
                        max_cycles: int = 200000) -> dict:
    """Exhaustive audit: residue split of every value, no two disjoint
    avoiding cycles, and agreement with the exactly-once border family
    where the edge counts stay below the moduli."""
    if instance.family != "modGrid":
        raise ValidationError("expected a modGrid instance")
    lg = instance.labelled_graph
    n = instance.parameters["n"]
    top, bottom, left = map(set, _border_edge_sets(n))
    cycles = _enumerate_all(lg.graph, max_cycles)
    split_violations = 0
    exactly_once_clashes = 0
    avoiding = []
    for c in cycles:
        es = set(cycle_edges(c))
        k1, k2, k3 = len(es & top), len(es & bottom), len(es & left)
        value = lg.value_of_cycle(c).coords[0]
        if value != (15 * k1 + 70 * k2 + 21 * k3) % 105:
            split_violations += 1
        avoids = lg.is_avoiding(c)
        if avoids != ((k1 % 7, k2 % 3, k3 % 5) == (1, 1, 1)):
            split_violations += 1
        if avoids != ((k1, k2, k3) == (1, 1, 1)):
            exactly_once_clashes += 1
        if avoids:
            avoiding.append(c)
    pair = first_disjoint_pair(avoiding)
    return {
        "family": "modGrid",
        "n": n,
        "cycles_total": len(cycles),
        "avoiding_count": len(avoiding),
        "residue_split_violations": split_violations,
        "matches_exactly_once": exactly_once_clashes == 0,
        "pairwise_intersecting": pair is None,
        "disjoint_pair": (None if pair is None
                          else [[vertex_to_json(v) for v in c] for c in pair]),
    }


# ---------------------------------------------------------------------------
# uniformly labelled complete graph

def _least_escaping_multiple(g: GroupElement, omega: AvoidSets,
                             d_max: int) -> Optional[int]:
    order = g.order()
    cap = order + 2 if order is not math.inf else d_max
    for d in range(3, int(cap) + 1):
        if omega.allows(g.scale(d)):
            return d
    return None


def complete_graph_obstruction(c: int, t: int, spec: GroupSpec,
                               g: GroupElement, omega: AvoidSets,
                               d_max: int = 512) -> ObstructionInstance:
    """The complete graph on ceil(c*d/(c-1)) - 1 vertices, every edge
    labelled g, where d is the least multiple above 2 escaping the avoid
    sets.  Requires d > (c-1)*t so the hitting floor lands above t."""
    if c < 2:
        raise ValidationError("need at least two cycles per shared vertex")
    if t < 1:
        raise ValidationError("hitting floor must be positive")
    if g.spec != spec or omega.spec != spec:
        raise ValidationError("label and avoid sets must share the group")
    d = _least_escaping_multiple(g, omega, d_max)
    if d is None:
        raise ValidationError(f"no multiple of the label escapes the avoid "
                              f"sets below {d_max}")
    if d <= (c - 1) * t:
        raise ValidationError(f"escape gap {d} is not above (c-1)*t = "
                              f"{(c - 1) * t}")
    n = -(-c * d // (c - 1)) - 1
    vs = list(range(1, n + 1))
    graph = Graph(vs, combinations(vs, 2))
    labels = {e: g for e in graph.edges}
    lg = LabelledGraph.build(graph, spec, labels, omega)
    return ObstructionInstance(lg, "completeUniform",
                               {"c": c, "t": t, "d": d, "n": n,
                                "g": list(g.coords)})


def canonical_complete_instance(c: int, t: int, d: int) -> ObstructionInstance:
    """Integer labels all 1, avoid set {3, ..., d-1}: the least escaping
    multiple is then exactly d."""
    spec = GroupSpec((0,))
    omega = AvoidSets.make(spec, [list(range(3, d))])
    return complete_graph_obstruction(c, t, spec, spec.element((1,)), omega)


def stacked_interval_instance(m: int, step: int) -> ObstructionInstance:
    """m integer factors with avoid intervals stacked end to end, all-ones
    label, three cycles per shared vertex.  The hitting floor of the result
    grows linearly in m*step."""
    if m < 1 or step < 1:
        raise ValidationError("need at least one factor and a positive step")
    spec = GroupSpec((0,) * m)
    sets = [list(range(3 + step * (i - 1), 3 + step * i)) for i in
            range(1, m + 1)]
    omega = AvoidSets.make(spec, sets)
    g = spec.element((1,) * m)
    d = 3 + m * step
    t = (d - 1) // 2
    inst = complete_graph_obstruction(3, t, spec, g, omega)
    if inst.parameters["d"] != d:
        raise PropertyViolation("stacked-interval",
                                f"escape gap {inst.parameters['d']} != {d}")
    return inst


def verify_complete_obstruction(instance: ObstructionInstance,
                                c: Optional[int] = None,
                                t: Optional[int] = None,
                                max_cycles: int = 300000,
                                scan_cap: int = 200000) -> dict:
    """Exhaustive audit: the minimum avoiding length forces any c avoiding
    cycles to share a vertex, and the exact hitting number is n - (d-1)."""
    if instance.family != "completeUniform":
        raise ValidationError("expected a completeUniform instance")
    p = instance.parameters
    c = p["c"] if c is None else c
    t = p["t"] if t is None else t
    d, n = p["d"], p["n"]
    lg = instance.labelled_graph
    cycles = _enumerate_all(lg.graph, max_cycles)
    avoiding = [cy for cy in cycles if lg.is_avoiding(cy)]
    if not avoiding:
        raise PropertyViolation("completeUniform", "no avoiding cycles")
    min_len = min(len(cy) for cy in avoiding)
    threshold = Fraction((c - 1) * n, c)
    length_d_all = all(lg.is_avoiding(cy) for cy in cycles if len(cy) == d)

    scan = {"ran": False, "subsets": math.comb(len(avoiding), c),
            "all_share": None}
    if scan["subsets"] <= scan_cap:
        bits = _vertex_bits(lg.graph)
        masks = [sum(bits[v] for v in cy) for cy in avoiding]
        shared = True
        for combo in combinations(masks, c):
            inter = combo[0]
            for m in combo[1:]:
                inter &= m
            if not inter:
                shared = False
                break
        scan.update(ran=True, all_share=shared)

    tau = min_hitting_set(CycleFamily(lg, tuple(avoiding), True))
    survivors = sorted(lg.graph.vertices, key=vkey)[n - d:]
    witness = tuple(survivors)
    witness_ok = (len(witness) == d and lg.is_avoiding(witness)
                  and all(lg.graph.has_edge(u, v)
                          for u, v in zip(witness, witness[1:] + witness[:1])))

    return {
        "family": "completeUniform",
        "c": c, "t": t, "d": d, "n": n,
        "cycles_total": len(cycles),
        "avoiding_count": len(avoiding),
        "min_avoiding_length": min_len,
        "shared_vertex_threshold": str(threshold),
        "length_bound_holds": min_len > threshold,
        "counting_common_vertex": c * min_len > (c - 1) * n,
        "direct_scan": scan,
        "length_d_all_avoiding": length_d_all,
        "tau": len(tau.vertices),
        "tau_expected": n - (d - 1),
        "tau_matches": len(tau.vertices) == n - (d - 1),
        "tau_exceeds_floor": len(tau.vertices) > t,
        "hitting_certificate": [vertex_to_json(v)
                                for v in sorted(tau.vertices, key=vkey)],
        "survivor_after_deletion": [vertex_to_json(v) for v in witness],
        "survivor_is_avoiding_cycle": witness_ok,
    }
