"""Group-labelled graphs: values, avoiding cycles, shifting, and encoders.

A labelling assigns one group element per edge; the value of a subgraph is
the sum over its edges.  Avoid-sets are per-factor; a cycle qualifies when
every factor's value stays outside that factor's set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import BoundExceeded, PropertyViolation, ValidationError
from .graphs import (
    Graph,
    canonical_cycle,
    canonical_edge,
    cycle_edges,
    enumerate_cycles,
    path_edges,
    vkey,
)
from .groups import AvoidSets, GroupElement, GroupSpec, Subgroup, decompose_subgroup


def vertex_to_json(v):
    if isinstance(v, tuple):
        return [vertex_to_json(x) for x in v]
    return v


def vertex_from_json(v):
    if isinstance(v, list):
        return tuple(vertex_from_json(x) for x in v)
    return v


class Labelling:
    """Edge labels over one group spec, optionally read modulo a subgroup."""

    __slots__ = ("spec", "values", "quotient_by")

    def __init__(self, spec: GroupSpec, values: Mapping[tuple, GroupElement],
                 quotient_by: Optional[Subgroup] = None):
        vals = {}
        for e, g in values.items():
            if g.spec != spec:
                raise ValidationError(f"label of {e!r} is not over the labelling's spec")
            ce = canonical_edge(*e)
            g = quotient_by.reduce(g) if quotient_by is not None else g
            vals[ce] = g
        self.spec = spec
        self.values = vals
        self.quotient_by = quotient_by

    def of(self, u, v=None) -> GroupElement:
        e = canonical_edge(u, v) if v is not None else canonical_edge(*u)
        return self.values[e]

    def _reduce(self, g: GroupElement) -> GroupElement:
        return self.quotient_by.reduce(g) if self.quotient_by is not None else g

    def value_of_edges(self, edges: Iterable[tuple]) -> GroupElement:
        total = self.spec.zero
        for e in edges:
            total = total + self.values[canonical_edge(*e)]
        return self._reduce(total)

    def value_of_path(self, path: Sequence) -> GroupElement:
        return self.value_of_edges(path_edges(path))

    def value_of_cycle(self, cycle: Sequence) -> GroupElement:
        return self.value_of_edges(cycle_edges(cycle))


class LabelledGraph:
    """A simple graph, its labelling, and the per-factor avoid sets."""

    __slots__ = ("graph", "labelling", "avoid")

    def __init__(self, graph: Graph, labelling: Labelling, avoid: AvoidSets):
        if avoid.spec != labelling.spec:
            raise ValidationError("avoid sets and labelling use different specs")
        missing = [e for e in graph.edges if e not in labelling.values]
        if missing:
            raise ValidationError(f"unlabelled edges: {missing[:3]!r}")
        self.graph = graph
        self.labelling = labelling
        self.avoid = avoid

    @classmethod
    def build(cls, graph: Graph, spec: GroupSpec,
              labels: Mapping[tuple, GroupElement],
              avoid: Optional[AvoidSets] = None) -> "LabelledGraph":
        if avoid is None:
            avoid = AvoidSets.make(spec, (frozenset(),) * spec.m)
        return cls(graph, Labelling(spec, labels), avoid)

    @property
    def spec(self) -> GroupSpec:
        return self.labelling.spec

    def label_of(self, u, v=None) -> GroupElement:
        return self.labelling.of(u, v)

    def value_of_edges(self, edges: Iterable[tuple]) -> GroupElement:
        return self.labelling.value_of_edges(edges)

    def value_of_path(self, path: Sequence) -> GroupElement:
        return self.labelling.value_of_path(path)

    def value_of_cycle(self, cycle: Sequence) -> GroupElement:
        return self.labelling.value_of_cycle(cycle)

    def is_avoiding(self, cycle: Sequence) -> bool:
        return self.avoid.allows(self.value_of_cycle(cycle))

    def omega_avoiding_cycles(self,
                              max_len: Optional[int] = None,
                              max_count: Optional[int] = None) -> "CycleFamily":
        cycles, truncated = enumerate_cycles(self.graph, max_len=max_len,
                                             max_count=max_count)
        chosen = tuple(c for c in cycles if self.is_avoiding(c))
        return CycleFamily(self, chosen, complete=not truncated and max_len is None)

    def all_cycles(self,
                   max_len: Optional[int] = None,
                   max_count: Optional[int] = None) -> "CycleFamily":
        cycles, truncated = enumerate_cycles(self.graph, max_len=max_len,
                                             max_count=max_count)
        return CycleFamily(self, tuple(cycles),
                           complete=not truncated and max_len is None)

    def subgraph(self, vertices: Iterable) -> "LabelledGraph":
        g = self.graph.subgraph(vertices)
        labels = {e: self.labelling.values[e] for e in g.edges}
        return LabelledGraph(g, Labelling(self.spec, labels,
                                          self.labelling.quotient_by), self.avoid)

    def with_graph(self, g: Graph) -> "LabelledGraph":
        labels = {e: self.labelling.values[e] for e in g.edges}
        return LabelledGraph(g, Labelling(self.spec, labels,
                                          self.labelling.quotient_by), self.avoid)

    def to_json(self) -> dict:
        return {
            "groups": self.spec.to_json(),
            "omega": self.avoid.to_json(),
            "vertices": [vertex_to_json(v) for v in self.graph.vertices],
            "edges": [
                {"u": vertex_to_json(u), "v": vertex_to_json(v),
                 "label": list(self.labelling.values[(u, v)].coords)}
                for u, v in self.graph.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabelledGraph":
        try:
            spec = GroupSpec.from_json(data["groups"])
            avoid = AvoidSets.from_json(spec, data["omega"])
            vertices = [vertex_from_json(v) for v in data["vertices"]]
            edges = []
            labels = {}
            for rec in data["edges"]:
                u = vertex_from_json(rec["u"])
                v = vertex_from_json(rec["v"])
                e = canonical_edge(u, v)
                edges.append(e)
                labels[e] = spec.element(tuple(rec["label"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed labelled-graph JSON: {exc}") from exc
        return cls.build(Graph(vertices, edges), spec, labels, avoid)


@dataclass(frozen=True)
class CycleFamily:
    """An enumerated cycle family over a labelled graph."""

    host: LabelledGraph
    cycles: tuple
    complete: bool

    def __len__(self) -> int:
        return len(self.cycles)

    def values(self) -> list[GroupElement]:
        return [self.host.value_of_cycle(c) for c in self.cycles]

    def restricted_to(self, vertices: Iterable) -> "CycleFamily":
        keep = set(vertices)
        return CycleFamily(self.host,
                           tuple(c for c in self.cycles if set(c) <= keep),
                           self.complete)

    def to_json(self) -> dict:
        return {
            "cycles": [[vertex_to_json(v) for v in c] for c in self.cycles],
            "values": [list(g.coords) for g in self.values()],
            "complete": self.complete,
            "count": len(self.cycles),
        }


# ---------------------------------------------------------------------------
# factor projections

def subspec(spec: GroupSpec, factors: Sequence[int]) -> GroupSpec:
    return GroupSpec(tuple(spec.moduli[i] for i in factors))


def project_element(g: GroupElement, factors: Sequence[int],
                    target: Optional[GroupSpec] = None) -> GroupElement:
    t = target if target is not None else subspec(g.spec, factors)
    return t.element(tuple(g.coords[i] for i in factors))


def project_labelled_graph(lg: LabelledGraph, factors: Sequence[int]) -> LabelledGraph:
    t = subspec(lg.spec, factors)
    labels = {e: project_element(g, factors, t)
              for e, g in lg.labelling.values.items()}
    avoid = AvoidSets.make(t, tuple(lg.avoid.omega[i] for i in factors))
    return LabelledGraph.build(lg.graph, t, labels, avoid)


def induced_quotient_labelling(lg: LabelledGraph, sub: Subgroup) -> LabelledGraph:
    """Labels reduced to canonical coset representatives; sums reduce again.

    The avoid sets are dropped (coset values live in the quotient).
    """
    if sub.spec != lg.spec:
        raise ValidationError("subgroup is over a different spec")
    lab = Labelling(lg.spec, lg.labelling.values, quotient_by=sub)
    empty = AvoidSets.make(lg.spec, (frozenset(),) * lg.spec.m)
    return LabelledGraph(lg.graph, lab, empty)


# ---------------------------------------------------------------------------
# shifting

def shift(lg: LabelledGraph, x, delta: GroupElement) -> LabelledGraph:
    """Add delta to every edge at x.  Needs 2*delta = 0 so cycles keep values."""
    if delta.spec != lg.spec:
        raise ValidationError("delta is not over the labelling's spec")
    if not delta.scale(2).is_zero():
        raise ValidationError("shift element must have order at most 2")
    if x not in lg.graph:
        raise ValidationError(f"no vertex {x!r}")
    labels = dict(lg.labelling.values)
    for y in lg.graph.neighbors(x):
        e = canonical_edge(x, y)
        labels[e] = labels[e] + delta
    return LabelledGraph(lg.graph, Labelling(lg.spec, labels,
                                             lg.labelling.quotient_by), lg.avoid)


def bipartite_witness(lg: LabelledGraph,
                      subgraph: Optional[Graph] = None,
                      factors: Optional[Sequence[int]] = None,
                      max_count: Optional[int] = 200000) -> Optional[tuple]:
    """First cycle with a non-zero value (in the chosen factors), else None.

    Exhaustive over all cycles; a basis check would not do for undirected
    labellings.
    """
    g = subgraph if subgraph is not None else lg.graph
    cycles, truncated = enumerate_cycles(g, max_count=max_count)
    idx = list(factors) if factors is not None else list(range(lg.spec.m))
    for c in cycles:
        val = lg.value_of_cycle(c)
        if any(val.coords[i] != 0 for i in idx):
            return c
    if truncated:
        raise BoundExceeded(f"cycle enumeration truncated at {max_count}")
    return None


def is_gamma_bipartite(lg: LabelledGraph,
                       subgraph: Optional[Graph] = None,
                       factors: Optional[Sequence[int]] = None,
                       max_count: Optional[int] = 200000) -> bool:
    return bipartite_witness(lg, subgraph, factors, max_count) is None


@dataclass(frozen=True)
class NormalizationResult:
    labelled_graph: LabelledGraph
    shifts: tuple  # (vertex, delta) pairs, in application order


def branch_graph(h: Graph) -> tuple[Graph, list[tuple]]:
    """Contract corridors: returns the graph on degree-!=2 vertices + corridors."""
    from .graphs import corridors as _corr

    cs = _corr(h)
    hubs = [v for v in h.vertices if h.degree(v) != 2]
    edges = []
    for p in cs:
        if p[0] == p[-1] or canonical_edge(p[0], p[-1]) in edges:
            raise ValidationError("branch graph is not simple")
        edges.append(canonical_edge(p[0], p[-1]))
    return Graph(hubs, edges), cs


def _is_subdivision_of_3connected(h: Graph) -> tuple[bool, Optional[Graph], list]:
    try:
        bg, cs = branch_graph(h)
    except ValidationError:
        return False, None, []
    if bg.n < 4 or not h.is_connected():
        return False, bg, cs
    if any(h.degree(v) < 2 for v in h.vertices):
        return False, bg, cs
    covered = set()
    for p in cs:
        covered.update(path_edges(p))
    if covered != set(h.edges):
        return False, bg, cs
    import networkx as nx

    g = nx.Graph(list(bg.edges))
    return nx.node_connectivity(g) >= 3, bg, cs


def normalize_on_subdivision(lg: LabelledGraph, h: Graph,
                             factors: Optional[Sequence[int]] = None,
                             max_count: Optional[int] = 200000) -> NormalizationResult:
    """Shift until every corridor of h has value zero (in the chosen factors).

    h must be a subdivision of a 3-connected graph and bipartite in those
    factors.  Walks a spanning tree of the branch graph; each frontier
    corridor's value has order <= 2, so shifting it away at the new branch
    vertex cannot disturb the corridors already done.
    """
    ok, bg, cs = _is_subdivision_of_3connected(h)
    if not ok:
        raise ValidationError("not a subdivision of a 3-connected graph")
    if bipartite_witness(lg, h, factors, max_count) is not None:
        raise ValidationError("not bipartite in the requested factors")
    idx = list(factors) if factors is not None else list(range(lg.spec.m))
    corridor_at = {}
    for p in cs:
        corridor_at.setdefault(p[0], []).append(p)
        corridor_at.setdefault(p[-1], []).append(p)

    cur = lg
    shifts: list[tuple] = []
    root = bg.vertices[0]
    done = {root}
    frontier = [root]
    while frontier:
        v = frontier.pop(0)
        for p in sorted(corridor_at.get(v, []), key=lambda q: tuple(vkey(x) for x in q)):
            w = p[-1] if p[0] == v else p[0]
            if w in done:
                continue
            val = cur.value_of_path(p)
            delta = cur.spec.element(tuple(
                c if i in idx else 0 for i, c in enumerate(val.coords)))
            if not delta.scale(2).is_zero():
                raise PropertyViolation(
                    "shifting-normalization",
                    f"corridor value {delta.coords} is not 2-torsion")
            if not delta.is_zero():
                cur = shift(cur, w, delta)
                shifts.append((w, delta))
            done.add(w)
            frontier.append(w)
    for p in cs:
        val = cur.value_of_path(p)
        if any(val.coords[i] != 0 for i in idx):
            raise PropertyViolation(
                "shifting-normalization",
                f"corridor {p!r} still non-zero after normalization")
    return NormalizationResult(cur, tuple(shifts))


# ---------------------------------------------------------------------------
# encoders

@dataclass(frozen=True)
class VertexEncoding:
    """Edge labelling carrying a doubled copy of a vertex labelling's group."""

    spec: GroupSpec                  # the doubled group
    omega: frozenset                 # image of the forbidden set, same size
    labelled_graph: LabelledGraph

    def in_omega(self, g: GroupElement) -> bool:
        return g in self.omega


def vertex_to_edge_labelling(graph: Graph,
                             vertex_labels: Mapping,
                             omega: Iterable[GroupElement]) -> VertexEncoding:
    """Convert a vertex labelling into an edge labelling preserving membership.

    The subgroup generated by the forbidden set and the label image is put in
    normal form, every finite factor is doubled, and an edge gets the sum of
    its endpoints' lifted labels.  A cycle's edge value is then the doubling
    map applied to its vertex value, so membership transfers exactly.
    """
    omega = list(omega)
    labels = dict(vertex_labels)
    specs = {g.spec for g in list(labels.values()) + omega}
    if len(specs) != 1:
        raise ValidationError("vertex labels and omega must share one spec")
    src = specs.pop()
    missing = [v for v in graph.vertices if v not in labels]
    if missing:
        raise ValidationError(f"unlabelled vertices: {missing[:3]!r}")

    gens = sorted(set(omega) | set(labels.values()), key=lambda g: g.key())
    dec = decompose_subgroup(src, gens)
    normal = dec.normal_spec
    doubled = GroupSpec(tuple(2 * n if n else 0 for n in normal.moduli))

    def lift(g: GroupElement) -> GroupElement:
        return doubled.element(g.coords)

    def double(g: GroupElement) -> GroupElement:
        return doubled.element(tuple(2 * c for c in g.coords))

    edge_labels = {}
    for u, v in graph.edges:
        edge_labels[(u, v)] = lift(dec.apply(labels[u])) + lift(dec.apply(labels[v]))
    omega_image = frozenset(double(dec.apply(g)) for g in omega)
    if len(omega_image) != len(set(omega)):
        raise PropertyViolation("vertex-encoding",
                                "doubling map collapsed forbidden elements")
    lg = LabelledGraph.build(Graph(graph.vertices, graph.edges), doubled, edge_labels)
    return VertexEncoding(doubled, omega_image, lg)


def vertex_value_of_cycle(vertex_labels: Mapping, cycle: Sequence) -> GroupElement:
    total = None
    for v in cycle:
        g = vertex_labels[v]
        total = g if total is None else total + g
    return total


def encode_intersection_constraint(graph: Graph, s: Iterable, t: int) -> LabelledGraph:
    """Integer weights counting endpoints in s; avoiding = meeting s >= t times."""
    if t < 1:
        raise ValidationError("t must be at least 1")
    sset = set(s)
    spec = GroupSpec((0,))
    labels = {e: spec.element((int(e[0] in sset) + int(e[1] in sset),))
              for e in graph.edges}
    avoid = AvoidSets.make(spec, (frozenset(2 * i for i in range(t)),))
    return LabelledGraph.build(graph, spec, labels, avoid)


def fundamental_cycles(graph: Graph) -> tuple[dict, list[tuple]]:
    """BFS forest + the basis cycle of each non-tree edge.

    Returns (map non-tree edge -> canonical cycle, tree edge list).
    """
    parent: dict = {}
    order: dict = {}
    tree_edges = []
    for root in graph.vertices:
        if root in parent:
            continue
        parent[root] = None
        order[root] = len(order)
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in graph.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    order[y] = len(order)
                    tree_edges.append(canonical_edge(x, y))
                    queue.append(y)
    tset = set(tree_edges)
    basis = {}
    for e in graph.edges:
        if e in tset:
            continue
        u, v = e

        def root_path(x):
            p = [x]
            while parent[p[-1]] is not None:
                p.append(parent[p[-1]])
            return p

        pu, pv = root_path(u), root_path(v)
        su, sv = set(pu), set(pv)
        meet = next(x for x in pu if x in sv)
        cyc = pu[:pu.index(meet) + 1] + list(reversed(pv[:pv.index(meet)]))
        basis[e] = canonical_cycle(cyc)
    return basis, tree_edges


def cycle_space_labelling(graph: Graph, phi: Mapping[tuple, GroupElement],
                          spec: GroupSpec) -> LabelledGraph:
    """Tree edges zero; non-tree edge e carries the image of its basis cycle.

    phi maps each non-tree edge (canonical pair) to a group element; the
    labelling then realizes the induced cycle-space homomorphism on every
    even subgraph.
    """
    basis, tree_edges = fundamental_cycles(graph)
    labels = {e: spec.zero for e in tree_edges}
    for e in basis:
        if e not in phi:
            raise ValidationError(f"phi missing non-tree edge {e!r}")
        labels[e] = phi[e]
    return LabelledGraph.build(graph, spec, labels)


def even_subgraph_phi_value(graph: Graph, phi: Mapping[tuple, GroupElement],
                            spec: GroupSpec, edges: Iterable[tuple]) -> GroupElement:
    """Image of an even subgraph under the cycle-space homomorphism.

    Decomposes the subgraph over the fundamental-cycle basis (one basis cycle
    per non-tree edge it uses) and sums their images; the decomposition is
    re-checked as a symmetric difference of edge sets.
    """
    basis, tree_edges = fundamental_cycles(graph)
    eset = {canonical_edge(*e) for e in edges}
    deg: dict = {}
    for u, v in eset:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d % 2 for d in deg.values()):
        raise ValidationError("subgraph is not even")
    nontree = eset - set(tree_edges)
    sym: set = set()
    total = spec.zero
    for e in nontree:
        sym ^= set(cycle_edges(basis[e]))
        total = total + phi[e]
    if sym != eset:
        raise PropertyViolation(
            "cycle-space",
            "basis decomposition does not reproduce the subgraph")
    return total


# ---------------------------------------------------------------------------
# path surgery

def cycle_arcs(cycle: Sequence, u, v) -> tuple[tuple, tuple]:
    """The two u-v paths along a cycle."""
    cyc = list(cycle)
    if u not in cyc or v not in cyc or u == v:
        raise ValidationError("need two distinct cycle vertices")
    i = cyc.index(u)
    cyc = cyc[i:] + cyc[:i]
    j = cyc.index(v)
    return tuple(cyc[:j + 1]), tuple([cyc[0]] + cyc[j:][::-1])


def trim_connector(path: Sequence, from_set: Iterable, to_set: Iterable) -> tuple:
    """Minimal subpath from from_set to to_set touching each exactly once.

    Accepts the path in either orientation.
    """
    fs, ts = set(from_set), set(to_set)
    for cand in (tuple(path), tuple(reversed(path))):
        idx_to = next((i for i, x in enumerate(cand) if x in ts), None)
        if idx_to is None:
            break
        idx_from = max((i for i in range(idx_to + 1) if cand[i] in fs), default=None)
        if idx_from is None:
            continue
        return cand[idx_from:idx_to + 1]
    raise ValidationError("path does not join the two sets")


def non_zero_t_path_from_cycle(lg: LabelledGraph, cycle: Sequence,
                               connectors: Sequence[Sequence],
                               t_set: Iterable) -> tuple:
    """A non-zero T-path inside a non-zero cycle plus three disjoint spokes.

    Trims each connector to meet the cycle once and T once, evaluates the six
    endpoint-pair paths through the union, and splits a non-zero one at its
    internal T-vertices.
    """
    t_set = set(t_set)
    if len(connectors) != 3:
        raise ValidationError("need exactly three connectors")
    if lg.value_of_cycle(cycle).is_zero():
        raise ValidationError("cycle value is zero")
    on_cycle = set(cycle)
    trimmed = [trim_connector(p, on_cycle, t_set) for p in connectors]
    seen: set = set()
    for p in trimmed:
        if seen & set(p):
            raise ValidationError("connectors are not vertex-disjoint")
        seen |= set(p)
    anchors = [p[0] for p in trimmed]   # on the cycle
    tips = [p[-1] for p in trimmed]     # in T

    candidates = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        arc_a, arc_b = cycle_arcs(cycle, anchors[j], anchors[k])
        through = arc_a if anchors[i] in arc_a else arc_b
        avoiding = arc_b if through is arc_a else arc_a
        for arc in (through, avoiding):
            # build tip_j .. anchor_j .. arc .. anchor_k .. tip_k
            left = tuple(reversed(trimmed[j]))
            right = trimmed[k]
            mid = arc if arc[0] == anchors[j] else tuple(reversed(arc))
            cand = left + mid[1:] + right[1:]
            candidates.append(cand)

    for cand in candidates:
        if len(set(cand)) != len(cand):
            continue
        if lg.value_of_path(cand).is_zero():
            continue
        # split at internal T-vertices; some piece must be non-zero
        cuts = [0] + [i for i in range(1, len(cand) - 1) if cand[i] in t_set] \
            + [len(cand) - 1]
        for a, b in zip(cuts, cuts[1:]):
            piece = cand[a:b + 1]
            if len(piece) >= 2 and not lg.value_of_path(piece).is_zero():
                return piece
    raise PropertyViolation(
        "non-zero-t-path",
        "no candidate path is non-zero, though the cycle is")


def reroute_path(lg: LabelledGraph, cycle: Sequence, path: Sequence,
                 connectors: Sequence[Sequence]) -> tuple:
    """A path with the same endpoints but a different value.

    The cycle must be non-zero and linked to the path by three disjoint
    connectors; detouring through one of the cycle's arcs must change the
    value for some pair of connectors.
    """
    if len(connectors) != 3:
        raise ValidationError("need exactly three connectors")
    if lg.value_of_cycle(cycle).is_zero():
        raise ValidationError("cycle value is zero")
    on_cycle, on_path = set(cycle), set(path)
    if on_cycle & on_path:
        raise ValidationError("cycle and path must be disjoint")
    trimmed = [trim_connector(p, on_path, on_cycle) for p in connectors]
    seen: set = set()
    for p in trimmed:
        if seen & set(p):
            raise ValidationError("connectors are not vertex-disjoint")
        seen |= set(p)
    base = lg.value_of_path(path)
    pos = {v: i for i, v in enumerate(path)}

    for skip in range(3):
        j, k = [x for x in range(3) if x != skip]
        if pos[trimmed[j][0]] > pos[trimmed[k][0]]:
            j, k = k, j
        pj, pk = trimmed[j], trimmed[k]
        for arc in cycle_arcs(cycle, pj[-1], pk[-1]):
            mid = arc if arc[0] == pj[-1] else tuple(reversed(arc))
            cand = (tuple(path[:pos[pj[0]] + 1]) + pj[1:] + mid[1:]
                    + tuple(reversed(pk))[1:]
                    + tuple(path[pos[pk[0]]:])[1:])
            if len(set(cand)) != len(cand):
                continue
            if lg.value_of_path(cand) != base:
                return cand
    raise PropertyViolation(
        "reroute-path",
        "every detour matches the original value, though the cycle is non-zero")


# ---------------------------------------------------------------------------
# multigraph cleanup

def simplify_multigraph(edge_triples: Sequence[tuple], spec: GroupSpec,
                        avoid: Optional[AvoidSets] = None) -> LabelledGraph:
    """Subdivide loops and repeated parallel edges into labelled simple paths.

    The first occurrence of each simple edge is kept as-is; every further
    parallel copy becomes a two-vertex path carrying the label on its first
    arc, and every loop a two-vertex triangle.  Cycle values are preserved.
    """
    vertices: set = set()
    edges = []
    labels = {}
    fresh = 0
    for u, v, g in edge_triples:
        if g.spec != spec:
            raise ValidationError("label spec mismatch")
        vertices.add(u)
        vertices.add(v)
        if u == v:
            a, b = ("sub", fresh, 1), ("sub", fresh, 2)
            fresh += 1
            edges += [(u, a), (a, b), (b, u)]
            labels[canonical_edge(u, a)] = g
            labels[canonical_edge(a, b)] = spec.zero
            labels[canonical_edge(b, u)] = spec.zero
            vertices |= {a, b}
            continue
        e = canonical_edge(u, v)
        if e not in labels:
            edges.append(e)
            labels[e] = g
            continue
        a, b = ("sub", fresh, 1), ("sub", fresh, 2)
        fresh += 1
        edges += [(u, a), (a, b), (b, v)]
        labels[canonical_edge(u, a)] = g
        labels[canonical_edge(a, b)] = spec.zero
        labels[canonical_edge(b, v)] = spec.zero
        vertices |= {a, b}
    return LabelledGraph.build(Graph(vertices, edges), spec, labels, avoid)
