"""Simple undirected graphs with a canonical vertex order.

Vertices may be ints, strings, or (nested) tuples of those; vkey gives them
one total order so that enumeration output is deterministic and reruns are
byte-identical.  Cycles and paths are plain vertex tuples.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import ValidationError


def vkey(v):
    """Total order key across the vertex types we use."""
    if isinstance(v, bool):
        raise ValidationError(f"bad vertex {v!r}")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, len(v), tuple(vkey(x) for x in v))
    raise ValidationError(f"unsupported vertex type {type(v).__name__}")


def canonical_edge(u, v) -> tuple:
    if u == v:
        raise ValidationError(f"loop at {u!r} not allowed in a simple graph")
    return (u, v) if vkey(u) < vkey(v) else (v, u)


def path_edges(path: Sequence) -> list[tuple]:
    return [canonical_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]


def cycle_edges(cycle: Sequence) -> list[tuple]:
    """Edges of a closed cycle given as a vertex tuple without the repeat."""
    if len(cycle) < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    es = path_edges(cycle)
    es.append(canonical_edge(cycle[-1], cycle[0]))
    return es


def canonical_cycle(cycle: Sequence) -> tuple:
    """Rotate and reflect so the smallest vertex leads, smaller neighbour second."""
    cyc = list(cycle)
    if len(set(cyc)) != len(cyc):
        raise ValidationError("cycle has a repeated vertex")
    i = min(range(len(cyc)), key=lambda j: vkey(cyc[j]))
    cyc = cyc[i:] + cyc[:i]
    if vkey(cyc[-1]) < vkey(cyc[1]):
        cyc = [cyc[0]] + cyc[1:][::-1]
    return tuple(cyc)


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("vertices", "edges", "_adj", "_vset", "_eset")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vset = set(vertices)
        es = set()
        for e in edges:
            u, v = e
            es.add(canonical_edge(u, v))
            vset.add(u)
            vset.add(v)
        self.vertices = tuple(sorted(vset, key=vkey))
        self.edges = tuple(sorted(es, key=lambda e: (vkey(e[0]), vkey(e[1]))))
        adj: dict = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns, key=vkey)) for v, ns in adj.items()}
        self._vset = frozenset(self.vertices)
        self._eset = frozenset(self.edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._vset

    def has_edge(self, u, v) -> bool:
        return u != v and canonical_edge(u, v) in self._eset

    def neighbors(self, v) -> tuple:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def edge_set(self) -> frozenset:
        return self._eset

    def subgraph(self, vs: Iterable) -> "Graph":
        keep = set(vs) & self._vset
        return Graph(keep, [e for e in self.edges if e[0] in keep and e[1] in keep])

    def without_vertices(self, vs: Iterable) -> "Graph":
        drop = set(vs)
        return self.subgraph(v for v in self.vertices if v not in drop)

    def without_edges(self, es: Iterable) -> "Graph":
        drop = {canonical_edge(*e) for e in es}
        return Graph(self.vertices, [e for e in self.edges if e not in drop])

    def with_edges(self, es: Iterable) -> "Graph":
        return Graph(self.vertices, list(self.edges) + [tuple(e) for e in es])

    def union(self, other: "Graph") -> "Graph":
        return Graph(self.vertices + other.vertices, self.edges + other.edges)

    def components(self) -> list[frozenset]:
        seen: set = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_path(self, s, t, forbidden: Iterable = ()) -> Optional[tuple]:
        """Shortest s-t path avoiding forbidden internal vertices, or None."""
        if s not in self._vset or t not in self._vset:
            return None
        bad = set(forbidden) - {s, t}
        if s in bad or t in bad:
            return None
        prev = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                path = []
                while x is not None:
                    path.append(x)
                    x = prev[x]
                return tuple(reversed(path))
            for y in self._adj[x]:
                if y not in prev and y not in bad:
                    prev[y] = x
                    queue.append(y)
        return None


def enumerate_cycles(graph: Graph,
                     max_len: Optional[int] = None,
                     max_count: Optional[int] = None) -> tuple[list[tuple], bool]:
    """All cycles of the graph as canonical vertex tuples.

    Each cycle appears once: rooted at its smallest vertex, walked toward the
    smaller of the root's two cycle-neighbours.  Returns (cycles, truncated);
    truncated means max_count was hit and the list is incomplete.
    """
    cycles: list[tuple] = []
    truncated = False
    adj = graph._adj
    for root in graph.vertices:
        rk = vkey(root)
        path = [root]
        on_path = {root}

        def extend() -> bool:
            v = path[-1]
            for w in adj[v]:
                if vkey(w) <= rk or w in on_path:
                    if w == root and len(path) >= 3 and vkey(path[1]) < vkey(path[-1]):
                        cycles.append(tuple(path))
                        if max_count is not None and len(cycles) >= max_count:
                            return False
                    continue
                if max_len is not None and len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                ok = extend()
                path.pop()
                on_path.remove(w)
                if not ok:
                    return False
            return True

        if not extend():
            truncated = True
            break
    cycles.sort(key=lambda c: (len(c), tuple(vkey(v) for v in c)))
    return cycles, truncated


def enumerate_a_paths(graph: Graph,
                      anchors: Iterable,
                      max_len: Optional[int] = None,
                      max_count: Optional[int] = None) -> tuple[list[tuple], bool]:
    """Paths with both ends in anchors and no internal vertex in anchors.

    Single edges between two anchors count.  Each path appears once, from its
    smaller endpoint.  Returns (paths, truncated) as enumerate_cycles does.
    """
    aset = set(anchors) & graph._vset
    paths: list[tuple] = []
    truncated = False
    adj = graph._adj
    for start in sorted(aset, key=vkey):
        sk = vkey(start)
        path = [start]
        on_path = {start}

        def extend() -> bool:
            v = path[-1]
            for w in adj[v]:
                if w in on_path:
                    continue
                if w in aset:
                    if vkey(w) > sk:
                        paths.append(tuple(path) + (w,))
                        if max_count is not None and len(paths) >= max_count:
                            return False
                    continue
                if max_len is not None and len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                ok = extend()
                path.pop()
                on_path.remove(w)
                if not ok:
                    return False
            return True

        if not extend():
            truncated = True
            break
    paths.sort(key=lambda p: (len(p), tuple(vkey(v) for v in p)))
    return paths, truncated


def corridors(graph: Graph) -> list[tuple]:
    """Maximal paths whose internal vertices all have degree 2.

    Endpoints have degree other than 2.  Components that are bare cycles of
    degree-2 vertices contribute nothing.  Each corridor appears once, from
    its smaller endpoint.
    """
    out = []
    seen_edges: set = set()
    hubs = [v for v in graph.vertices if graph.degree(v) != 2]
    for h in hubs:
        for nb in graph.neighbors(h):
            first = canonical_edge(h, nb)
            if first in seen_edges:
                continue
            walk = [h, nb]
            while graph.degree(walk[-1]) == 2:
                a, b = graph.neighbors(walk[-1])
                nxt = b if a == walk[-2] else a
                walk.append(nxt)
            for e in path_edges(walk):
                seen_edges.add(e)
            if vkey(walk[-1]) < vkey(walk[0]):
                walk.reverse()
            out.append(tuple(walk))
    out.sort(key=lambda p: (len(p), tuple(vkey(v) for v in p)))
    return out


def vertex_disjoint_paths(graph: Graph, s, t, need: int) -> list[tuple]:
    """Up to `need` pairwise internally disjoint s-t paths via unit node flow.

    Returns as many as exist, capped at `need`.  s and t must be distinct
    non-adjacent or adjacent vertices of the graph; an s-t edge yields the
    two-vertex path.
    """
    if s not in graph._vset or t not in graph._vset or s == t:
        raise ValidationError("need two distinct vertices in the graph")
    # arcs with residual capacities over split nodes: (v, 'in') -> (v, 'out')
    cap: dict[tuple, dict[tuple, int]] = {}

    def node_in(v):
        return (v, 0)

    def node_out(v):
        return (v, 1)

    def add_arc(a, b, c):
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + c
        cap.setdefault(b, {}).setdefault(a, 0)

    for v in graph.vertices:
        add_arc(node_in(v), node_out(v), need if v in (s, t) else 1)
    for u, v in graph.edges:
        add_arc(node_out(u), node_in(v), 1)
        add_arc(node_out(v), node_in(u), 1)

    src, snk = node_out(s), node_in(t)
    flow = 0
    while flow < need:
        prev = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            x = queue.popleft()
            for y in sorted(cap[x], key=lambda nd: (vkey(nd[0]), nd[1])):
                if y not in prev and cap[x][y] > 0:
                    prev[y] = x
                    queue.append(y)
        if snk not in prev:
            break
        node = snk
        while prev[node] is not None:
            p = prev[node]
            cap[p][node] -= 1
            cap[node][p] += 1
            node = p
        flow += 1

    # forward flow on arc a->b is original_cap - residual; rebuild original caps
    paths = []
    orig: dict[tuple, dict[tuple, int]] = {}
    for v in graph.vertices:
        orig.setdefault(node_in(v), {})[node_out(v)] = need if v in (s, t) else 1
    for u, v in graph.edges:
        orig.setdefault(node_out(u), {})[node_in(v)] = 1
        orig.setdefault(node_out(v), {})[node_in(u)] = 1
    sent: dict[tuple, dict[tuple, int]] = {}
    for a, nbrs in orig.items():
        for b, c in nbrs.items():
            f = c - cap[a][b]
            if f > 0:
                sent.setdefault(a, {})[b] = f
    for _ in range(flow):
        path = [s]
        node = src
        while node != snk:
            nxt = sorted(sent.get(node, {}), key=lambda nd: (vkey(nd[0]), nd[1]))[0]
            sent[node][nxt] -= 1
            if sent[node][nxt] == 0:
                del sent[node][nxt]
            node = nxt
            if node[1] == 0:
                path.append(node[0])
        paths.append(tuple(path))
    return paths


def disjoint_set_paths(graph: Graph, sources: Iterable, sinks: Iterable,
                       need: int) -> list[tuple]:
    """Up to `need` vertex-disjoint paths from sources to sinks.

    Each path runs from a source to a sink and meets the two sets only
    there; distinct paths share no vertex at all.
    """
    src_set, snk_set = set(sources), set(sinks)
    if src_set & snk_set:
        raise ValidationError("source and sink sets overlap")
    if not src_set or not snk_set:
        return []
    a, b = ("terminal", 0), ("terminal", 1)
    if a in graph or b in graph:
        raise ValidationError("graph uses the reserved terminal vertices")
    aug = graph.with_edges([(a, v) for v in src_set if v in graph]
                           + [(b, v) for v in snk_set if v in graph])
    out = []
    for p in vertex_disjoint_paths(aug, a, b, need):
        inner = p[1:-1]
        i = max(j for j, v in enumerate(inner) if v in src_set)
        k = min(j for j, v in enumerate(inner) if v in snk_set)
        out.append(inner[i:k + 1])
    return out


def cycle_from_edges(edges: Iterable[tuple]) -> tuple:
    """The canonical cycle with exactly this edge set.

    Rejects edge sets that are not a single cycle.
    """
    adj: dict = {}
    es = {canonical_edge(*e) for e in edges}
    for u, v in es:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj:
        raise ValidationError("empty edge set is not a cycle")
    for v, ns in adj.items():
        if len(ns) != 2:
            raise ValidationError(f"vertex {v!r} has degree {len(ns)}, not 2")
    start = min(adj, key=vkey)
    walk = [start]
    prev = None
    while True:
        ns = [x for x in adj[walk[-1]] if x != prev]
        nxt = ns[0]
        if nxt == start:
            break
        prev = walk[-1]
        walk.append(nxt)
    if len(walk) != len(adj):
        raise ValidationError("edge set is not a single cycle")
    return canonical_cycle(walk)
