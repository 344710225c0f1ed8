"""Chamber systems and the application of decorations.

The chamber system of an embedded graph is its barycentric subdivision:
one new vertex per edge and per face, each original vertex typed 0, edge
midpoints typed 1, face centers typed 2, and each edge typed like the
vertex opposite to it in its two triangles.  Applying a decoration
replaces every chamber by a copy of the decoration (mirrored in every
other chamber), identifies the copies along shared sides, and reads the
resulting graph off the type structure.
"""

from __future__ import annotations

from .decorations import Decoration
from .maps import MapError, PlaneGraph

Origin = tuple[str, int]


class ChamberSystem:
    """A typed barycentric-subdivision-like triangulated map."""

    __slots__ = ("g", "vertex_type", "edge_type", "origin_of")

    def __init__(self, g: PlaneGraph, vertex_type, edge_type,
                 origin_of=None):
        self.g = g
        self.vertex_type = tuple(vertex_type)
        self.edge_type = tuple(edge_type)
        self.origin_of = None if origin_of is None else tuple(origin_of)

    def check(self) -> None:
        g = self.g
        for f, darts in enumerate(g.faces):
            if len(darts) != 3:
                raise MapError("chamber system face is not a triangle")
            types = {self.vertex_type[g.org[d]] for d in darts}
            if types != {0, 1, 2}:
                raise MapError("chamber corners must have types 0,1,2")
        for e in range(g.ne):
            u, w = g.edge_ends(e)
            if {self.edge_type[e], self.vertex_type[u],
                    self.vertex_type[w]} != {0, 1, 2}:
                raise MapError("edge type must complete its endpoints")


def barycentric_subdivision(g: PlaneGraph) -> ChamberSystem:
    """The chamber system of a connected embedded graph."""
    nv, ne, nf = g.n, g.ne, len(g.faces)
    vid = list(range(nv))
    eid = [nv + e for e in range(ne)]
    fid = [nv + ne + f for f in range(nf)]

    # tokens: per original dart d there are three half-edge pairs
    #   type-2: org(d) -- mid(e(d))     tokens (6d, 6d+1)
    #   type-1: org(d) -- center(left)  tokens (6d+2, 6d+3)
    #   type-0: mid(e(d)) -- center(left)  tokens (6d+4, 6d+5)
    def t2(d): return 6 * d
    def t1(d): return 6 * d + 2
    def t0(d): return 6 * d + 4

    rot: list[list[int]] = [[] for _ in range(nv + ne + nf)]
    for v in range(nv):
        for d in g.darts_at(v):
            rot[vid[v]] += [t2(d), t1(d)]
    for e in range(ne):
        d, dr = 2 * e, 2 * e + 1
        rot[eid[e]] = [t2(d) + 1, t0(dr), t2(dr) + 1, t0(d)]
    for f in range(nf):
        for d in g.faces[f]:
            rot[fid[f]] += [t1(d) + 1, t0(d) + 1]

    pair: dict[int, int] = {}
    for d in range(2 * ne):
        for base in (t2(d), t1(d), t0(d)):
            pair[base] = base + 1
            pair[base + 1] = base

    trans: dict[int, int] = {}
    k = 0
    for row in rot:
        for t in row:
            if t not in trans:
                trans[t] = 2 * k
                trans[pair[t]] = 2 * k + 1
                k += 1
    org = [0] * (2 * k)
    nxt = [0] * (2 * k)
    for v, row in enumerate(rot):
        for i, t in enumerate(row):
            org[trans[t]] = v
            nxt[trans[t]] = trans[row[(i + 1) % len(row)]]
    outer_dart = None
    if g.outer is not None:
        outer_dart = trans[t1(g.faces[g.outer][0]) + 1]
        # the face left of a center->vertex dart of the outer center is a
        # chamber; outer face of the subdivision is not well defined, so
        # chamber systems carry no marked outer face
        outer_dart = None
    cg = PlaneGraph(org, nxt, outer_dart)

    vertex_type = [0] * nv + [1] * ne + [2] * nf
    origin_of = ([("v", v) for v in range(nv)] + [("e", e) for e in range(ne)]
                 + [("f", f) for f in range(nf)])
    edge_type = [0] * cg.ne
    for e2 in range(cg.ne):
        u, w = cg.edge_ends(e2)
        edge_type[e2] = 3 - vertex_type[u] - vertex_type[w]
    cs = ChamberSystem(cg, vertex_type, edge_type, origin_of)
    cs.check()
    return cs


def extract_original(c: ChamberSystem) -> PlaneGraph:
    """Rebuilds the graph whose chamber system this is.

    Vertices are the type-0 vertices; each type-1 vertex carries exactly
    two type-2 edges which merge into one edge of the result.
    """
    g = c.g
    vt, et = c.vertex_type, c.edge_type
    verts = [v for v in range(g.n) if vt[v] == 0]
    vmap = {v: i for i, v in enumerate(verts)}

    # per type-0 vertex: its type-2 darts in rotation order
    half: dict[int, list[int]] = {}
    for v in verts:
        half[v] = [d for d in g.darts_at(v) if et[d >> 1] == 2]
        if not half[v]:
            raise MapError("type-0 vertex without type-2 edges")
    # pair the two type-2 darts through each type-1 vertex
    mate: dict[int, int] = {}
    for m in range(g.n):
        if vt[m] != 1:
            continue
        t2 = [d for d in g.darts_at(m) if et[d >> 1] == 2]
        if len(t2) != 2:
            raise MapError("type-1 vertex without exactly two type-2 edges")
        a, b = t2[0] ^ 1, t2[1] ^ 1   # darts from the type-0 endpoints
        mate[a] = b
        mate[b] = a
        if g.org[a] == g.org[b]:
            raise MapError("extraction would create a loop")

    dart_id: dict[int, int] = {}
    k = 0
    for v in verts:
        for d in half[v]:
            if d not in dart_id:
                dart_id[d] = 2 * k
                dart_id[mate[d]] = 2 * k + 1
                k += 1
    org = [0] * (2 * k)
    nxt = [0] * (2 * k)
    for v in verts:
        row = half[v]
        for i, d in enumerate(row):
            org[dart_id[d]] = vmap[v]
            nxt[dart_id[d]] = dart_id[row[(i + 1) % len(row)]]
    return PlaneGraph(org, nxt)


# -- decoration application --------------------------------------------------


def _side_paths(d: Decoration) -> dict[int, list[int]]:
    """Side k as the vertex path from corner min to corner max index.

    Sides are read along the outer walk; side k joins the two corners
    other than vk."""
    g = d.g
    walk = g.faces[g.outer]
    verts = [g.org[x] for x in walk]
    m = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    v0, v1, v2 = d.corners
    sides: dict[int, list[int]] = {}
    for k, (a, b) in ((0, (v1, v2)), (1, (v0, v2)), (2, (v0, v1))):
        third = ({v0, v1, v2} - {a, b}).pop()
        path = [a]
        i = pos[a]
        while verts[i] != b:
            i = (i + 1) % m
            path.append(verts[i])
        if third in path[1:-1]:
            path = [b]
            i = pos[b]
            while verts[i] != a:
                i = (i + 1) % m
                path.append(verts[i])
            path.reverse()
        sides[k] = path
    return sides


def apply_decoration(g: PlaneGraph, d: Decoration) -> PlaneGraph:
    """The graph obtained by decorating every chamber of g."""
    return extract_original(decorate_chambers(g, d))


def decorate_chambers(g: PlaneGraph, d: Decoration) -> ChamberSystem:
    """The chamber system produced by filling every chamber of C_g with
    the decoration (mirrored in alternate chambers)."""
    if g.ne < 1:
        raise MapError("seed graph needs at least one edge")
    dg = d.g
    sides = _side_paths(d)
    v0, v1, v2 = d.corners
    corner_of_type = {0: v0, 1: v1, 2: v2}

    # chambers = flags (dart, sign): sign 0 uses the decoration as is,
    # sign 1 the mirror image.  chamber id = 2*dart + sign.
    nch = 4 * g.ne

    def nbr(ch: int, k: int) -> int:
        dd, s = ch >> 1, ch & 1
        if k == 2:
            return 2 * dd + (1 - s)
        if k == 0:
            return 2 * (dd ^ 1) + (1 - s)
        if s == 0:
            return 2 * g.nxt[dd] + 1
        return 2 * g.prv[dd] + 0

    # glue (chamber, decoration-vertex) pairs along shared sides
    parent = list(range(nch * dg.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        a, b = find(x), find(y)
        if a != b:
            parent[a] = b

    for ch in range(nch):
        for k in range(3):
            other = nbr(ch, k)
            if other < ch:
                continue
            for x in sides[k]:
                union(ch * dg.n + x, other * dg.n + x)

    # faces of the new chamber system: one per (chamber, inner face of d)
    face_walks: list[list[tuple[int, int]]] = []   # [(chamber, d-dart)]
    for ch in range(nch):
        s = ch & 1
        for f, darts in enumerate(dg.faces):
            if f == dg.outer:
                continue
            if s == 0:
                face_walks.append([(ch, x) for x in darts])
            else:
                # mirror: reverse the walk and flip each dart
                face_walks.append([(ch, x ^ 1) for x in reversed(darts)])

    # edge classes: interior edges pair inside a chamber, boundary edges
    # pair with the neighbor across the side they lie on
    side_of_edge: dict[int, int] = {}
    for k in range(3):
        path = sides[k]
        for i in range(len(path) - 1):
            u, w = path[i], path[i + 1]
            for dd in dg.darts_at(u):
                if dg.org[dd ^ 1] == w and dg.face_of[dd] == dg.outer:
                    side_of_edge[dd >> 1] = k
                    break
            else:
                for dd in dg.darts_at(u):
                    if dg.org[dd ^ 1] == w and dg.face_of[dd ^ 1] == dg.outer:
                        side_of_edge[dd >> 1] = k
                        break

    def edge_class(ch: int, e: int) -> tuple[int, int]:
        k = side_of_edge.get(e)
        if k is None:
            return (ch, e)
        other = nbr(ch, k)
        return (min(ch, other), e)

    # build the map from oriented face walks
    dart_of: dict[tuple[int, int], int] = {}
    walk_flat: list[tuple[int, int]] = []
    for fw in face_walks:
        for ch, x in fw:
            dart_of[(ch, x)] = len(walk_flat)
            walk_flat.append((ch, x))
    nd = len(walk_flat)
    fnext = [0] * nd
    i = 0
    for fw in face_walks:
        L = len(fw)
        for j in range(L):
            fnext[i + j] = i + (j + 1) % L
        i += L
    # reverse pairing: group darts by edge class
    by_edge: dict[tuple[int, int], list[int]] = {}
    for idx, (ch, x) in enumerate(walk_flat):
        by_edge.setdefault(edge_class(ch, x >> 1), []).append(idx)
    rev = [0] * nd
    for key, idxs in by_edge.items():
        if len(idxs) != 2:
            raise MapError(f"edge class {key} has {len(idxs)} sides")
        a, b = idxs
        rev[a] = b
        rev[b] = a

    # sigma = alpha o fprev; renumber with rev = ^1
    fprev = [0] * nd
    for x in range(nd):
        fprev[fnext[x]] = x
    sigma = [rev[fprev[x]] for x in range(nd)]

    new_id = [-1] * nd
    k2 = 0
    for x in range(nd):
        if new_id[x] < 0:
            new_id[x] = 2 * k2
            new_id[rev[x]] = 2 * k2 + 1
            k2 += 1

    # vertex classes via union-find, numbered densely
    cls_id: dict[int, int] = {}

    def vclass(ch: int, x: int) -> int:
        root = find(ch * dg.n + dg.org[x])
        if root not in cls_id:
            cls_id[root] = len(cls_id)
        return cls_id[root]

    org = [0] * nd
    nxt = [0] * nd
    for x in range(nd):
        ch, dd = walk_flat[x]
        org[new_id[x]] = vclass(ch, dd)
        nxt[new_id[x]] = new_id[sigma[x]]
    cg = PlaneGraph(org, nxt)

    vertex_type = [0] * cg.n
    for x in range(nd):
        ch, dd = walk_flat[x]
        vertex_type[org[new_id[x]]] = d.vt[dg.org[dd]]
    edge_type = [0] * cg.ne
    for x in range(nd):
        ch, dd = walk_flat[x]
        edge_type[new_id[x] >> 1] = d.et[dd >> 1]
    cs = ChamberSystem(cg, vertex_type, edge_type)
    cs.check()
    return cs


# -- connectivity from the chamber system ------------------------------------


def _type1_subgraph_vertices(c: ChamberSystem) -> set[int]:
    out = set()
    for e in range(c.g.ne):
        if c.edge_type[e] == 1:
            out.update(c.g.edge_ends(e))
    return out


def connectivity_of_chamber_system(c: ChamberSystem) -> int:
    """1, 2 or 3 from the type-1 cycle structure (plane case only)."""
    g = c.g
    if g.genus != 0:
        raise MapError("type-1 cycle test is only valid at genus 0")
    et = c.edge_type
    pairs: dict[tuple[int, int], int] = {}
    for e in range(g.ne):
        if et[e] != 1:
            continue
        key = tuple(sorted(g.edge_ends(e)))
        if key in pairs:
            return 1
        pairs[key] = e

    # type-1 4-cycles: v - f - w - g alternating between the two color
    # classes of the bipartite type-1 subgraph
    nbrs: dict[int, dict[int, int]] = {}
    for key, e in pairs.items():
        u, w = key
        nbrs.setdefault(u, {})[w] = e
        nbrs.setdefault(w, {})[u] = e
    sub_vertices = set(nbrs)
    verts = sorted(nbrs)
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if w in nbrs[u]:
                continue
            common = sorted(set(nbrs[u]) & set(nbrs[w]))
            for ai in range(len(common)):
                for bi in range(ai + 1, len(common)):
                    a, b = common[ai], common[bi]
                    cyc = (nbrs[u][a], nbrs[a][w], nbrs[w][b], nbrs[b][u])
                    if _nonempty_cycle(g, cyc, sub_vertices):
                        return 2
    return 3


def _nonempty_cycle(g: PlaneGraph, cycle_edges, sub_vertices) -> bool:
    cyc = set(cycle_edges)
    cyc_verts = set()
    for e in cycle_edges:
        cyc_verts.update(g.edge_ends(e))
    d0 = 2 * cycle_edges[0]
    for start in (d0, d0 ^ 1):
        seen = {g.face_of[start]}
        stack = [g.face_of[start]]
        verts = set()
        while stack:
            f = stack.pop()
            for dd in g.faces[f]:
                verts.add(g.org[dd])
                if (dd >> 1) in cyc:
                    continue
                f2 = g.face_of[dd ^ 1]
                if f2 not in seen:
                    seen.add(f2)
                    stack.append(f2)
        if not (verts - cyc_verts) & sub_vertices:
            return False
    return True
