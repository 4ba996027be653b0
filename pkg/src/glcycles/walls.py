"""Walls: subdivided brick lattices with nail maps, slices, and handles.

A (c,r)-wall is a subdivision of the elementary wall on [2c] x [r]; the
model keeps the subdivision path of every elementary edge, so rows, columns
and subwalls always come back as concrete host paths.  The linking
operations (handle merging, cycle-with-subwalls, the avoid-set composer)
follow the constructive arguments step by step and audit their own output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Iterable, Mapping, Optional, Sequence

from .errors import BoundExceeded, PropertyViolation, ValidationError
from .graphs import (
    Graph,
    cycle_edges,
    cycle_from_edges,
    disjoint_set_paths,
    enumerate_cycles,
    path_edges,
    vkey,
)
from .groups import AvoidSets, subgroup_generated
from .labelling import (
    LabelledGraph,
    bipartite_witness,
    induced_quotient_labelling,
    normalize_on_subdivision,
    project_labelled_graph,
    reroute_path,
    subspec,
)


# ---------------------------------------------------------------------------
# the elementary pattern

@lru_cache(maxsize=None)
def _pattern(c: int, r: int) -> tuple[frozenset, frozenset]:
    """Vertices and edges of the elementary (c,r)-wall, corners deleted.

    Vertices are (x, y) with x in [1, 2c], y in [1, r]; horizontals run
    everywhere, verticals where x + y is odd; the two degree-1 vertices of
    that drawing are removed.
    """
    vs = {(x, y) for x in range(1, 2 * c + 1) for y in range(1, r + 1)}
    es = set()
    for y in range(1, r + 1):
        for x in range(1, 2 * c):
            es.add(((x, y), (x + 1, y)))
    for y in range(1, r):
        for x in range(1, 2 * c + 1):
            if (x + y) % 2 == 1:
                es.add(((x, y), (x, y + 1)))
    deg: dict = {v: 0 for v in vs}
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
    corners = sorted(v for v in vs if deg[v] == 1)
    if len(corners) != 2:
        raise ValidationError("pattern does not have exactly two loose corners")
    vs -= set(corners)
    es = {e for e in es if e[0] in vs and e[1] in vs}
    return frozenset(vs), frozenset(es)


def _pattern_key(u: tuple, v: tuple) -> tuple:
    return (u, v) if u < v else (v, u)


class Wall:
    """A (c,r)-wall: host graph, nail map, and one host path per brick edge."""

    __slots__ = ("c", "r", "graph", "nails", "paths")

    def __init__(self, c: int, r: int, graph: Graph,
                 nails: Mapping[tuple, object],
                 paths: Mapping[tuple, tuple]):
        self.c = c
        self.r = r
        self.graph = graph
        self.nails = dict(nails)
        self.paths = {k: tuple(p) for k, p in paths.items()}

    @property
    def order(self) -> int:
        return min(self.c, self.r)

    def nail_set(self) -> frozenset:
        return frozenset(self.nails.values())

    def pattern_of(self) -> dict:
        return {v: p for p, v in self.nails.items()}

    def host_path(self, u: tuple, v: tuple) -> tuple:
        """The subdivision path from nail u to nail v, oriented that way."""
        key = _pattern_key(u, v)
        path = self.paths[key]
        return path if key == (u, v) else tuple(reversed(path))


def validate_wall(wall: Wall) -> Wall:
    """Structural audit: the model really is a subdivision of the pattern."""
    vs, es = _pattern(wall.c, wall.r)
    if set(wall.nails) != vs:
        raise PropertyViolation("wall-structure", "nail map keys are not the pattern")
    if {_pattern_key(*e) for e in es} != set(wall.paths):
        raise PropertyViolation("wall-structure", "path keys are not the pattern edges")
    hosts = list(wall.nails.values())
    if len(set(hosts)) != len(hosts):
        raise PropertyViolation("wall-structure", "nail images collide")
    nail_vs = set(hosts)
    interior_owner: dict = {}
    all_edges = set()
    for key, path in wall.paths.items():
        u, v = key
        if len(path) < 2 or path[0] != wall.nails[u] or path[-1] != wall.nails[v]:
            raise PropertyViolation("wall-structure", f"path for {key} is misaligned")
        if len(set(path)) != len(path):
            raise PropertyViolation("wall-structure", f"path for {key} repeats a vertex")
        for x in path[1:-1]:
            if x in nail_vs or x in interior_owner:
                raise PropertyViolation("wall-structure",
                                        f"interior vertex {x!r} is shared")
            interior_owner[x] = key
        for e in path_edges(path):
            if e in all_edges:
                raise PropertyViolation("wall-structure", f"edge {e!r} is reused")
            all_edges.add(e)
    g = wall.graph
    if set(g.vertices) != nail_vs | set(interior_owner):
        raise PropertyViolation("wall-structure", "host vertex set does not match")
    if g.edge_set() != all_edges:
        raise PropertyViolation("wall-structure", "host edge set does not match")
    pat_deg: dict = {p: 0 for p in vs}
    for u, v in es:
        pat_deg[u] += 1
        pat_deg[v] += 1
    for p, host in wall.nails.items():
        if g.degree(host) != pat_deg[p]:
            raise PropertyViolation("wall-structure", f"nail {p} has the wrong degree")
    return wall


def elementary_wall(c: int, r: int) -> Wall:
    """The elementary (c,r)-wall itself, nails mapped identically."""
    if c < 3 or r < 3:
        raise ValidationError("wall needs c >= 3 and r >= 3")
    vs, es = _pattern(c, r)
    nails = {p: p for p in vs}
    paths = {_pattern_key(u, v): (u, v) for u, v in es}
    return validate_wall(Wall(c, r, Graph(vs, es), nails, paths))


def subdivide_wall(wall: Wall, lengths: Mapping[tuple, int]) -> Wall:
    """Replace each brick edge by a path of the requested edge count.

    Unlisted edges keep length 1; nails keep their host names.
    """
    want = {}
    for key, n in lengths.items():
        u, v = key
        ck = _pattern_key(tuple(u), tuple(v))
        if ck not in wall.paths:
            raise ValidationError(f"{key!r} is not an edge of the pattern")
        if not isinstance(n, int) or n < 1:
            raise ValidationError("subdivision lengths must be integers >= 1")
        want[ck] = n
    paths = {}
    for key in wall.paths:
        u, v = key
        a, b = wall.nails[u], wall.nails[v]
        n = want.get(key, 1)
        mid = [("s", u, v, i) for i in range(1, n)]
        paths[key] = tuple([a] + mid + [b])
    edges = [e for p in paths.values() for e in path_edges(p)]
    g = Graph([v for p in paths.values() for v in p], edges)
    return validate_wall(Wall(wall.c, wall.r, g, wall.nails, paths))


# ---------------------------------------------------------------------------
# rows and columns

def wall_row(wall: Wall, j: int) -> tuple:
    """Row j as a host path, west to east."""
    if not 1 <= j <= wall.r:
        raise ValidationError(f"row {j} out of range")
    cols = [x for x in range(1, 2 * wall.c + 1) if (x, j) in wall.nails]
    out = [wall.nails[(cols[0], j)]]
    for a, b in zip(cols, cols[1:]):
        if b != a + 1:
            raise PropertyViolation("wall-structure", f"row {j} is not contiguous")
        out.extend(wall.host_path((a, j), (b, j))[1:])
    return tuple(out)


def wall_column(wall: Wall, i: int) -> tuple:
    """Column i as a host path; it zigzags over x in {2i-1, 2i}."""
    if not 1 <= i <= wall.c:
        raise ValidationError(f"column {i} out of range")
    mine = {p for p in wall.nails if p[0] in (2 * i - 1, 2 * i)}
    adj: dict = {p: [] for p in mine}
    for key in wall.paths:
        u, v = key
        if u in mine and v in mine:
            adj[u].append(v)
            adj[v].append(u)
    ends = sorted(p for p, ns in adj.items() if len(ns) == 1)
    if len(ends) != 2 or any(len(ns) > 2 for ns in adj.values()):
        raise PropertyViolation("wall-structure", f"column {i} is not a path")
    walk = [ends[0]]
    while walk[-1] != ends[1]:
        nxt = [q for q in adj[walk[-1]] if len(walk) < 2 or q != walk[-2]]
        walk.append(nxt[0])
    if len(walk) != len(mine):
        raise PropertyViolation("wall-structure", f"column {i} is not a path")
    out = [wall.nails[walk[0]]]
    for a, b in zip(walk, walk[1:]):
        out.extend(wall.host_path(a, b)[1:])
    return tuple(out)


def wall_rows(wall: Wall) -> list[tuple]:
    return [wall_row(wall, j) for j in range(1, wall.r + 1)]


def wall_columns(wall: Wall) -> list[tuple]:
    return [wall_column(wall, i) for i in range(1, wall.c + 1)]


# ---------------------------------------------------------------------------
# subwalls and slices

@dataclass(frozen=True)
class Slice:
    """A column- or row-slice together with its provenance."""

    wall: Wall
    parent: Wall
    kind: str
    start: int
    count: int


def _subwall_from_block(wall: Wall, x0: int, y0: int, cc: int, rr: int,
                        flip_v: bool = False) -> Wall:
    """The (cc,rr)-subwall living on the block at (x0, y0).

    The vertical orientation is as requested; the horizontal one is forced
    by the brick parity, so both are tried.
    """
    t_vs, t_es = _pattern(cc, rr)
    for flip_h in (False, True):

        def mu(p):
            x, y = p
            gx = x0 - 1 + (2 * cc + 1 - x if flip_h else x)
            gy = y0 - 1 + (rr + 1 - y if flip_v else y)
            return (gx, gy)

        if not all(mu(p) in wall.nails for p in t_vs):
            continue
        if not all(_pattern_key(mu(u), mu(v)) in wall.paths for u, v in t_es):
            continue
        nails = {p: wall.nails[mu(p)] for p in t_vs}
        paths = {}
        for u, v in t_es:
            key = _pattern_key(u, v)
            paths[key] = wall.host_path(mu(key[0]), mu(key[1]))
        g = Graph([x for p in paths.values() for x in p],
                  [e for p in paths.values() for e in path_edges(p)])
        return validate_wall(Wall(cc, rr, g, nails, paths))
    raise ValidationError(
        f"no orientation embeds a ({cc},{rr})-wall on the block at ({x0},{y0})")


def column_slice(wall: Wall, start: int, count: int) -> Slice:
    """Columns start .. start+count-1 as a (count, r)-wall."""
    if count < 3 or count > wall.c:
        raise ValidationError("column slice needs 3 <= count <= c")
    if not 1 <= start <= wall.c - count + 1:
        raise ValidationError("column slice range out of bounds")
    sub = _subwall_from_block(wall, 2 * start - 1, 1, count, wall.r)
    return Slice(sub, wall, "column", start, count)


def row_slice(wall: Wall, start: int, count: int, from_top: bool = True) -> Slice:
    """Rows start .. start+count-1 as a (c, count)-wall.

    With from_top the slice's first row is the start row; otherwise the
    block is read upside down and its first row is the block's last.  The
    first column may fall in the wall's last column either way.
    """
    if count < 3 or count > wall.r:
        raise ValidationError("row slice needs 3 <= count <= r")
    if not 1 <= start <= wall.r - count + 1:
        raise ValidationError("row slice range out of bounds")
    sub = _subwall_from_block(wall, 1, start, wall.c, count, flip_v=not from_top)
    return Slice(sub, wall, "row", start, count)


def anchored_subwall(wall: Wall) -> Wall:
    """The (c-1, r-2)-subwall whose nails all have degree 3 in the wall."""
    if wall.c < 5 or wall.r < 5:
        raise ValidationError("anchored subwall needs c, r >= 5")
    sub = _subwall_from_block(wall, 2, 2, wall.c - 1, wall.r - 2)
    for v in sub.nails.values():
        if wall.graph.degree(v) == 2:
            raise PropertyViolation("anchored-subwall",
                                    f"nail {v!r} has degree 2 in the parent")
    return sub


def _block_subwalls(wall: Wall, size: int):
    """All (size,size)-subwalls in block position, both vertical readings."""
    for cs in range(1, wall.c - size + 2):
        for y0 in range(1, wall.r - size + 2):
            for flip_v in (False, True):
                yield _subwall_from_block(wall, 2 * cs - 1, y0, size, size,
                                          flip_v=flip_v)


# ---------------------------------------------------------------------------
# handles

def handle_endpoint_candidates(wall: Wall) -> frozenset:
    """Degree-2 nails in the first or last column."""
    edge_cols = {1, 2, 2 * wall.c - 1, 2 * wall.c}
    return frozenset(v for p, v in wall.nails.items()
                     if p[0] in edge_cols and wall.graph.degree(v) == 2)


def validate_handles(wall: Wall, handles: Sequence[Sequence]) -> list[tuple]:
    """Check a family of wall handles; returns them as tuples."""
    elig = handle_endpoint_candidates(wall)
    out = []
    seen: set = set()
    for h in handles:
        p = tuple(h)
        if len(p) < 2 or len(set(p)) != len(p):
            raise ValidationError("handles must be non-trivial simple paths")
        if p[0] not in elig or p[-1] not in elig:
            raise ValidationError(
                "handle endpoints must be degree-2 nails in the first or last column")
        for x in p[1:-1]:
            if x in wall.graph:
                raise ValidationError("handle interior touches the wall")
        if len(p) == 2 and wall.graph.has_edge(p[0], p[1]):
            raise ValidationError("handle edge lies inside the wall")
        if seen & set(p):
            raise ValidationError("handles are not vertex-disjoint")
        seen |= set(p)
        out.append(p)
    return out


def attach_handles(wall: Wall, handles: Sequence[Sequence]) -> Graph:
    return wall.graph.with_edges(
        e for h in handles for e in path_edges(tuple(h)))


def row_extension(wall: Wall, path: Sequence, slc: Slice) -> tuple:
    """Extend a path along its endpoint rows until it first meets the slice."""
    path = tuple(path)
    inside = slc.wall.graph
    pattern = wall.pattern_of()

    def walk_in(end):
        if end in inside:
            return (end,)
        if end not in pattern:
            raise ValidationError(f"endpoint {end!r} is not a nail of the wall")
        row = wall_row(wall, pattern[end][1])
        pos = row.index(end)
        hits = [i for i, v in enumerate(row) if v in inside]
        if not hits:
            raise ValidationError("endpoint row misses the slice")
        if pos < hits[0]:
            return tuple(reversed(row[pos:hits[0] + 1]))
        if pos > hits[-1]:
            return row[hits[-1]:pos + 1]
        raise ValidationError("endpoint sits over the slice but outside it")

    head = walk_in(path[0])
    tail = walk_in(path[-1])
    body = set(path) | set(head[:-1]) | set(tail[:-1])
    if len(body) != len(path) + len(head) + len(tail) - 2:
        raise PropertyViolation("row-extension", "extension walks re-enter the path")
    return head[:-1] + path + tuple(reversed(tail))[1:]


def row_extension_family(wall: Wall, handles: Sequence[Sequence],
                         slc: Slice) -> list[tuple]:
    """Extend each handle; the results must again be disjoint slice handles."""
    out = [row_extension(wall, h, slc) for h in handles]
    seen: set = set()
    for p in out:
        if seen & set(p):
            raise PropertyViolation("row-extension", "extensions collide")
        seen |= set(p)
    validate_handles(slc.wall, out)
    return out


# ---------------------------------------------------------------------------
# linking handles into one cycle

def _brick_cycle(wall: Wall) -> tuple:
    """The top-left brick as a host cycle."""
    ring = [(2, 1), (3, 1), (4, 1), (4, 2), (3, 2), (2, 2)]
    edges = []
    for a, b in zip(ring, ring[1:] + ring[:1]):
        edges.extend(path_edges(wall.host_path(a, b)))
    return cycle_from_edges(edges)


def _cycle_through_two(wall: Wall, handles: list[tuple]) -> tuple:
    """Base case: a cycle through both handles via two disjoint wall paths."""
    hubs = [("hub", 0), ("hub", 1)]
    aug = wall.graph.with_edges(
        [(hubs[i], h[0]) for i, h in enumerate(handles)]
        + [(hubs[i], h[-1]) for i, h in enumerate(handles)])
    from .graphs import vertex_disjoint_paths
    ps = vertex_disjoint_paths(aug, hubs[0], hubs[1], 2)
    if len(ps) < 2:
        raise PropertyViolation("link-handles", "wall is not 2-linked to the handles")
    edges = [e for h in handles for e in path_edges(h)]
    for p in ps:
        edges.extend(path_edges(p[1:-1]))
    return cycle_from_edges(edges)


def link_handles(wall: Wall, handles: Sequence[Sequence]) -> tuple:
    """One cycle inside wall + handles containing every handle entirely."""
    hs = validate_handles(wall, handles)
    hs.sort(key=lambda p: vkey(min(p, key=vkey)))
    t = len(hs)
    if wall.r < 3 or wall.c < max(3, t + 1):
        raise ValidationError("wall too small: need r >= 3 and c >= max(3, t+1)")
    cyc = _link(wall, hs)
    want = {e for h in hs for e in path_edges(h)}
    have = set(cycle_edges(cyc))
    if not want <= have:
        raise PropertyViolation("link-handles", "output cycle drops a handle edge")
    allowed = set(wall.graph.edge_set()) | want
    if not have <= allowed:
        raise PropertyViolation("link-handles", "output cycle leaves the union graph")
    return cyc


def _link(wall: Wall, hs: list[tuple]) -> tuple:
    t = len(hs)
    if t == 0:
        return _brick_cycle(wall)
    if t == 1:
        back = wall.graph.bfs_path(hs[0][0], hs[0][-1])
        return cycle_from_edges(path_edges(hs[0]) + path_edges(back))
    if t == 2:
        return _cycle_through_two(wall, hs)

    pattern = wall.pattern_of()
    sides = {"first": (1, 2), "last": (2 * wall.c - 1, 2 * wall.c)}
    merged = None
    for side in ("first", "last"):
        xs = sides[side]
        owners: dict = {}
        ends = []
        for i, h in enumerate(hs):
            for e in (h[0], h[-1]):
                if pattern[e][0] in xs:
                    owners[e] = i
                    ends.append(e)
        if len({owners[e] for e in ends}) < 2:
            continue
        col = wall_column(wall, 1 if side == "first" else wall.c)
        at = {v: i for i, v in enumerate(col)}
        pairs = []
        for u, v in combinations(ends, 2):
            if owners[u] == owners[v]:
                continue
            d = abs(at[u] - at[v])
            rows = tuple(sorted(pattern[e][1] for e in (u, v)))
            cols_ = tuple(sorted(pattern[e][0] for e in (u, v)))
            pairs.append((d, rows, cols_, u, v))
        pairs.sort()
        body = {v for h in hs for v in h}
        for d, _rows, _cols, u, v in pairs:
            lo, hi = sorted((at[u], at[v]))
            q = col[lo:hi + 1]
            if set(q) & body > {u, v}:
                continue
            i, j = owners[u], owners[v]
            pu = hs[i] if hs[i][-1] == u else tuple(reversed(hs[i]))
            pv = hs[j] if hs[j][0] == v else tuple(reversed(hs[j]))
            qq = q if q[0] == u else tuple(reversed(q))
            star = pu + qq[1:] + pv[1:]
            rest = [h for k, h in enumerate(hs) if k not in (i, j)] + [star]
            slc = (column_slice(wall, 2, wall.c - 1) if side == "first"
                   else column_slice(wall, 1, wall.c - 1))
            try:
                family = row_extension_family(wall, rest, slc)
            except (PropertyViolation, ValidationError):
                continue
            merged = (slc, family)
            break
        if merged:
            break
    if merged is None:
        raise PropertyViolation("link-handles", "no endpoint pair can be merged")
    slc, family = merged
    return _link(slc.wall, sorted(family, key=lambda p: vkey(min(p, key=vkey))))


# ---------------------------------------------------------------------------
# a cycle plus reserved subwalls

def _band_cycle(wall: Wall) -> tuple:
    """The cycle around rows 1 and 2, spanning the full width."""
    row1 = wall_row(wall, 1)
    row2 = wall_row(wall, 2)
    a, b = wall.nails[(2, 2)], wall.nails[(2 * wall.c, 2)]
    lo, hi = sorted((row2.index(a), row2.index(b)))
    edges = (path_edges(row1) + path_edges(row2[lo:hi + 1])
             + path_edges(wall.host_path((2, 1), (2, 2)))
             + path_edges(wall.host_path((2 * wall.c, 1), (2 * wall.c, 2))))
    return cycle_from_edges(edges)


def cycle_with_subwalls(wall: Wall, handles: Sequence[Sequence], k: int,
                        w: int) -> tuple[tuple, list[Wall]]:
    """A cycle through all handles plus k disjoint (w,w)-subwalls meeting it
    exactly in their first rows."""
    hs = validate_handles(wall, handles)
    hs.sort(key=lambda p: vkey(min(p, key=vkey)))
    t = len(hs)
    t_eff = max(1, t)
    if w < 4 or k < 1:
        raise ValidationError("need w >= 4 and k >= 1")
    if wall.c < k * w + max(3, t_eff + 1) or wall.r < (2 * t_eff + 1) * (w - 2) + 1:
        raise ValidationError(
            "wall too small: need c >= kw + max(3, t+1) and r >= (2t+1)(w-2) + 1")

    if t == 0:
        cyc = _band_cycle(wall)
        band = row_slice(wall, 2, w)
        subs = [column_slice(band.wall, (i - 1) * w + 1, w).wall
                for i in range(1, k + 1)]
        return _audit_subwalls(wall, hs, cyc, subs)

    pattern = wall.pattern_of()
    last_cols = {2 * wall.c - 1, 2 * wall.c}
    on_last = any(pattern[e][0] in last_cols for h in hs for e in (h[0], h[-1]))
    if on_last:
        reserve = column_slice(wall, wall.c - k * w + 1, k * w)
        keep = column_slice(wall, 1, wall.c - k * w)
    else:
        reserve = column_slice(wall, 1, k * w)
        keep = column_slice(wall, k * w + 1, wall.c - k * w)
    family = row_extension_family(wall, hs, keep)
    cyc = link_handles(keep.wall, family)

    ext_vs = {v for p in family for v in p}
    ext_es = {e for p in family for e in path_edges(p)}
    chosen = None
    for y0 in range(1, wall.r - w + 2):
        for from_top in (True, False):
            band = row_slice(reserve.wall, y0, w, from_top=from_top)
            row1 = wall_row(band.wall, 1)
            if not set(row1) <= ext_vs:
                continue
            if not set(path_edges(row1)) <= ext_es:
                continue
            if (set(band.wall.graph.vertices) - set(row1)) & ext_vs:
                continue
            chosen = band
            break
        if chosen:
            break
    if chosen is None:
        raise PropertyViolation("cycle-with-subwalls",
                                "no handle-free row band admits the slice")
    subs = [column_slice(chosen.wall, (i - 1) * w + 1, w).wall
            for i in range(1, k + 1)]
    return _audit_subwalls(wall, hs, cyc, subs)


def _audit_subwalls(wall: Wall, hs: list[tuple], cyc: tuple,
                    subs: list[Wall]) -> tuple[tuple, list[Wall]]:
    cyc_vs, cyc_es = set(cyc), set(cycle_edges(cyc))
    want = {e for h in hs for e in path_edges(h)}
    if not want <= cyc_es:
        raise PropertyViolation("cycle-with-subwalls", "cycle drops a handle")
    allowed = set(wall.graph.edge_set()) | want
    if not cyc_es <= allowed:
        raise PropertyViolation("cycle-with-subwalls", "cycle leaves the union graph")
    seen: set = set()
    for i, sub in enumerate(subs):
        svs = set(sub.graph.vertices)
        if seen & svs:
            raise PropertyViolation("cycle-with-subwalls", "subwalls overlap")
        seen |= svs
        row1 = wall_row(sub, 1)
        if cyc_vs & svs != set(row1):
            raise PropertyViolation("cycle-with-subwalls",
                                    f"subwall {i} meets the cycle off its first row")
        if cyc_es & sub.graph.edge_set() != set(path_edges(row1)):
            raise PropertyViolation("cycle-with-subwalls",
                                    f"subwall {i} shares a wrong edge with the cycle")
        if not sub.nail_set() <= wall.nail_set():
            raise PropertyViolation("cycle-with-subwalls",
                                    f"subwall {i} is not nail-anchored")
    return cyc, subs


# ---------------------------------------------------------------------------
# cleanness

def is_clean_wall(lg: LabelledGraph, wall: Wall, z_factors: Sequence[int],
                  ell: int, max_cycles: int = 200000) -> bool:
    """Zero on nail paths for the chosen factors; no subwall bipartite in all
    of the remaining ones."""
    m = lg.spec.m
    z = sorted(set(z_factors))
    if any(not 0 <= i < m for i in z):
        raise ValidationError("factor index out of range")
    if ell < 3:
        raise ValidationError("need ell >= 3")
    for path in wall.paths.values():
        val = lg.value_of_path(path)
        if any(val.coords[i] != 0 for i in z):
            return False
    rest = [i for i in range(m) if i not in z]
    if not rest:
        return True
    if ell > wall.c or ell > wall.r:
        return True
    for sub in _block_subwalls(wall, ell):
        if bipartite_witness(lg, subgraph=sub.graph, factors=rest,
                             max_count=max_cycles) is None:
            return False
    return True


@dataclass(frozen=True)
class CleanSubwallResult:
    labelled_graph: LabelledGraph
    z_factors: tuple[int, ...]
    subwall: Wall
    shifts: tuple


def clean_subwall_search(lg: LabelledGraph, wall: Wall,
                         psi: Sequence[int],
                         max_cycles: int = 200000) -> CleanSubwallResult:
    """Find factors Z and a bipartite-in-Z subwall, make its nail paths zero
    there by shifting, and hand back an anchored clean subwall.

    psi is the size schedule: m + 2 integers >= 3, read at |Z| and |Z| + 1.
    """
    m = lg.spec.m
    psi = list(psi)
    if len(psi) != m + 2 or any(int(x) != x or x < 3 for x in psi):
        raise ValidationError("size schedule needs m + 2 integers >= 3")
    if wall.order < psi[0] + 2:
        raise ValidationError("wall order must be at least psi[0] + 2")

    found = None
    for size in range(m, -1, -1):
        need = psi[size] + 2
        if need > wall.c or need > wall.r:
            continue
        for zt in combinations(range(m), size):
            for sub in _block_subwalls(wall, need):
                if zt and not bipartite_witness(
                        lg, subgraph=sub.graph, factors=zt,
                        max_count=max_cycles) is None:
                    continue
                found = (zt, sub)
                break
            if found:
                break
        if found:
            break
    if found is None:
        raise ValidationError("no block subwall fits the size schedule")
    zt, base = found

    shifts: tuple = ()
    lg2 = lg
    if zt:
        res = normalize_on_subdivision(lg, base.graph, factors=zt)
        lg2, shifts = res.labelled_graph, res.shifts

    target = psi[len(zt)]
    mid = anchored_subwall(base)
    sub = column_slice(mid, 1, target).wall
    for v in sub.nails.values():
        if wall.graph.degree(v) == 2:
            raise PropertyViolation("clean-subwall",
                                    "output nail has degree 2 in the big wall")
    if not is_clean_wall(lg2, sub, zt, psi[len(zt) + 1] + 2, max_cycles=max_cycles):
        raise PropertyViolation("clean-subwall", "certification failed")
    return CleanSubwallResult(lg2, tuple(zt), sub, shifts)


# ---------------------------------------------------------------------------
# the composer: an avoid-set-respecting cycle from a clean wall

def omega_avoiding_cycle_from_wall(lg: LabelledGraph, wall: Wall,
                                   handles: Sequence[Sequence],
                                   z_factors: Sequence[int], ell: int,
                                   w0: Optional[int] = None,
                                   max_cycles: int = 200000) -> tuple:
    """A cycle through the handles whose value clears every avoid set.

    Follows the detour-ledger construction: reserve one batch of subwalls
    per unconstrained factor, reroute each batch's first row inside its
    subwall to collect a good difference sequence, then pick the detour
    combination with the pair-selection search.
    """
    m = lg.spec.m
    z = sorted(set(z_factors))
    if any(not 0 <= i < m for i in z):
        raise ValidationError("factor index out of range")
    hs = validate_handles(wall, handles)
    if not is_clean_wall(lg, wall, z, ell, max_cycles=max_cycles):
        raise ValidationError("wall is not clean for the given factors")
    total = lg.value_of_edges(e for h in hs for e in path_edges(h))
    for i in z:
        if total.coords[i] in lg.avoid.omega[i]:
            raise ValidationError(
                f"handle total hits the avoid set of pinned factor {i}")

    if len(z) == m:
        cyc = link_handles(wall, hs)
        if not lg.avoid.allows(lg.value_of_cycle(cyc)):
            raise PropertyViolation("omega-avoiding-cycle",
                                    "pinned-factor cycle hits an avoid set")
        return cyc

    ys = [i for i in range(m) if i not in z]
    y = len(ys)
    sub_spec = subspec(lg.spec, ys)
    proj_avoid = AvoidSets.make(sub_spec, [sorted(lg.avoid.omega[i]) for i in ys])
    w_eff = proj_avoid.max_size
    length = y * w_eff + 1
    k = y * length
    cap = m * lg.avoid.max_size
    w0 = w0 if w0 is not None else max(ell, 4)
    if w0 < 4:
        raise ValidationError("need w0 >= 4")

    cyc, subs = cycle_with_subwalls(wall, hs, k, w0 + 1)
    lg_y = project_labelled_graph(lg, ys)
    base_val = lg_y.value_of_cycle(cyc)

    a_seqs: list[list] = []
    b_seqs: list[list] = []
    swaps: list[list[tuple[tuple, tuple]]] = []
    for fi, i in enumerate(ys):
        spec_i = subspec(lg.spec, [i])
        lg_i = project_labelled_graph(lg, [i])
        ledger: list = []
        row_a, row_b, row_s = [], [], []
        for j in range(length):
            sub = subs[fi * length + j]
            p_ij = wall_row(sub, 1)
            band = row_slice(sub, 2, w0)
            lam = induced_quotient_labelling(
                lg_i, subgroup_generated(spec_i, ledger))
            cycles, truncated = enumerate_cycles(band.wall.graph,
                                                 max_count=max_cycles)
            o_ij = next((c for c in cycles
                         if not lam.value_of_cycle(c).is_zero()), None)
            if o_ij is None:
                if truncated:
                    raise BoundExceeded(
                        f"cycle enumeration truncated at {max_cycles}")
                raise PropertyViolation(
                    "omega-avoiding-cycle",
                    f"no quotient-non-zero cycle in reserved subwall ({i},{j})")
            conns = disjoint_set_paths(sub.graph, set(p_ij), set(o_ij), 3)
            if len(conns) < 3:
                raise PropertyViolation(
                    "omega-avoiding-cycle",
                    f"subwall ({i},{j}) lacks three disjoint connectors")
            q_ij = reroute_path(lam, o_ij, p_ij, conns)
            a = lg_y.value_of_path(q_ij)
            b = lg_y.value_of_path(p_ij)
            d = spec_i.element(((a - b).coords[fi],))
            if d.order() <= cap:
                ledger.append(d)
            row_a.append(a)
            row_b.append(b)
            row_s.append((p_ij, q_ij))
        a_seqs.append(row_a)
        b_seqs.append(row_b)
        swaps.append(row_s)

    h_val = base_val
    for row in b_seqs:
        for b in row:
            h_val = h_val - b
    from .groups import good_pair_select
    choice = good_pair_select(a_seqs, b_seqs, proj_avoid, h_val)

    edges = set(cycle_edges(cyc))
    for fi in range(y):
        for j in range(length):
            if choice[fi][j] == b_seqs[fi][j]:
                continue
            p_ij, q_ij = swaps[fi][j]
            edges -= set(path_edges(p_ij))
            edges |= set(path_edges(q_ij))
    out = cycle_from_edges(edges)
    if not lg.avoid.allows(lg.value_of_cycle(out)):
        raise PropertyViolation("omega-avoiding-cycle",
                                "assembled cycle still hits an avoid set")
    return out


# ---------------------------------------------------------------------------
# separation counts

def nail_cut_bound(wall: Wall, s_set: Iterable, x: int, y: int) -> int:
    """Nails cut off from column x and row y by deleting the given set.

    Always at most |S| squared.
    """
    s = set(s_set)
    guard = set(wall_column(wall, x)) | set(wall_row(wall, y))
    nails = wall.nail_set()
    count = 0
    for comp in wall.graph.without_vertices(s).components():
        if comp & guard:
            continue
        count += len(comp & nails)
    if count > len(s) ** 2:
        raise PropertyViolation("nail-cut", "separation bound exceeded")
    return count


def verify_rowcol_invariant(wall: Wall, max_separator: int = 2,
                            max_assignments: int = 100000) -> dict:
    """Sweep small separations: a side holds a full row iff a full column."""
    rows = [set(r) for r in wall_rows(wall)]
    cols = [set(c) for c in wall_columns(wall)]
    if max_separator >= wall.order:
        raise ValidationError("separator budget must stay below the wall order")
    checked = 0
    violations = 0
    verts = wall.graph.vertices
    for size in range(0, max_separator + 1):
        for s in combinations(verts, size):
            comps = wall.graph.without_vertices(s).components()
            if 2 ** len(comps) > max_assignments:
                raise BoundExceeded("too many components to sweep")
            for mask in iproduct((0, 1), repeat=len(comps)):
                side = set(s)
                for bit, comp in zip(mask, comps):
                    if bit:
                        side |= comp
                checked += 1
                has_row = any(r <= side for r in rows)
                has_col = any(c <= side for c in cols)
                if has_row != has_col:
                    violations += 1
    return {"separations_checked": checked, "violations": violations}
