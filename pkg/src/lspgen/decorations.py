"""Decorations: typed triangulated disks that act on embedded graphs.

A decoration is a 2-connected plane graph with a marked outer face, a
type function on vertices and edges with values in {0, 1, 2}, and corner
vertices v0, v1, v2 on the outer face.  All inner faces are triangles,
every edge sees all three types across itself and its endpoints, edge
types alternate around each vertex, and the degree rules distinguish
inner vertices, outer non-corners, and the corners.

Two decorations are considered the same when there is an orientation-
preserving, type-preserving isomorphism fixing the outer face, mapping v1
to v1 and the unordered corner pair {v0, v2} onto itself.  This is the
unique reading consistent with the published per-rate counts: identity
and dual are distinct, mirror images of chiral decorations are distinct,
symmetric ones are not doubled, and placements of {v0, v2} that differ
beyond the forced corners are counted (and classified) separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .maps import (PlaneGraph, canonical_code, canonical_order,
                   vertex_connectivity_capped)
from .predecorations import Predecoration


@dataclass(frozen=True)
class Decoration:
    g: PlaneGraph
    vt: tuple[int, ...]
    et: tuple[int, ...]
    corners: tuple[int, int, int]   # (v0, v1, v2); v1 is identity-relevant

    @property
    def v1(self) -> int:
        return self.corners[1]

    def rate(self) -> int:
        return len(self.g.faces) - 1

    def identity_code(self) -> tuple[int, ...]:
        return decoration_identity(self)

    def connectivity_class(self) -> int:
        return connectivity_class(self)


def inflation_rate(d: Decoration) -> int:
    return d.rate()


def _outer_vertices(g: PlaneGraph) -> list[int]:
    seen = []
    got = set()
    for dd in g.faces[g.outer]:
        v = g.org[dd]
        if v not in got:
            got.add(v)
            seen.append(v)
    return seen


def _noncorner_ok(g: PlaneGraph, vt, v: int, outer: bool) -> bool:
    deg = g.degree(v)
    if outer:
        return deg == 3 if vt[v] == 1 else deg > 3
    return deg == 4 if vt[v] == 1 else deg > 4


def validate(g: PlaneGraph, vt, et, v1: Optional[int] = None,
             v0: Optional[int] = None, v2: Optional[int] = None) -> list[str]:
    """All violations of the decoration conditions (empty if valid).

    With only v1 given, v0 and v2 are required to exist somewhere; with
    all three given, that rooting itself is checked.
    """
    problems: list[str] = []
    if g.genus != 0:
        problems.append("not a plane graph")
    if g.outer is None:
        return problems + ["no outer face marked"]
    if vertex_connectivity_capped(g, 2) < 2:
        problems.append("not 2-connected")
    for f, darts in enumerate(g.faces):
        if f != g.outer and len(darts) != 3:
            problems.append(f"inner face {f} has size {len(darts)}")
    for e in range(g.ne):
        u, w = g.edge_ends(e)
        if {et[e], vt[u], vt[w]} != {0, 1, 2}:
            problems.append(f"edge {e} types {{{et[e]},{vt[u]},{vt[w]}}}")
    for v in range(g.n):
        others = {0, 1, 2} - {vt[v]}
        for d in g.darts_at(v):
            if et[d >> 1] not in others:
                problems.append(f"edge type {et[d >> 1]} at vertex {v}")
            nd = g.nxt[d]
            if g.face_of[d] != g.outer and et[d >> 1] == et[nd >> 1]:
                problems.append(f"equal types around inner face at {v}")
    if problems:
        return problems

    outer_set = set(_outer_vertices(g))
    if v1 is not None and v1 not in outer_set:
        return [f"v1={v1} not on the outer face"]
    if v1 is not None:
        deg = g.degree(v1)
        if vt[v1] == 1 and deg != 2:
            problems.append(f"v1 of type 1 must have degree 2, has {deg}")
        if vt[v1] != 1 and deg <= 2:
            problems.append(f"v1 of type {vt[v1]} must have degree > 2")
    for v in range(g.n):
        if v in (v0, v1, v2):
            continue
        if v in outer_set:
            if (v0 is None or v2 is None) and vt[v] != 1:
                continue    # could still become v0 or v2
            if not _noncorner_ok(g, vt, v, outer=True):
                problems.append(f"outer vertex {v} violates degree rule")
        elif not _noncorner_ok(g, vt, v, outer=False):
            problems.append(f"inner vertex {v} violates degree rule")
    if problems:
        return problems

    if v0 is not None and v2 is not None:
        if len({v0, v1, v2}) != 3:
            problems.append("corners not distinct")
        elif vt[v0] == 1 or vt[v2] == 1:
            problems.append("v0 and v2 must not have type 1")
        elif not {v0, v2} <= outer_set:
            problems.append("corners must lie on the outer face")
        return problems

    if v1 is None:
        for cand in outer_set:
            deg = g.degree(cand)
            ok = deg == 2 if vt[cand] == 1 else deg > 2
            if ok and not validate(g, vt, et, cand):
                return []
        return ["no valid v1"]
    return [] if corner_pairs(g, vt, v1) else ["no valid v0/v2 assignment"]


def corner_pairs(g: PlaneGraph, vt, v1: int) -> list[tuple[int, int]]:
    """All valid {v0, v2} assignments for a fixed v1."""
    outer = _outer_vertices(g)
    forced = [v for v in outer
              if v != v1 and not _noncorner_ok(g, vt, v, outer=True)]
    if len(forced) > 2 or any(vt[v] == 1 for v in forced):
        return []
    cands = [v for v in outer if v != v1 and vt[v] != 1]
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if all(f in (a, b) for f in forced):
                pairs.append((a, b))
    return pairs


# -- connectivity class -----------------------------------------------------


def connectivity_class(self) -> int:
        return connectivity_class(self)


def inflation_rate(d: Decoration) -> int:
    return d.rate()


def _outer_vertices(g: PlaneGraph) -> list[int]:
    seen = []
    got = set()
    for dd in g.faces[g.outer]:
        v = g.org[dd]
        if v not in got:
            got.add(v)
            seen.append(v)
    return seen


def _noncorner_ok(g: PlaneGraph, vt, v: int, outer: bool) -> bool:
    deg = g.degree(v)
    if outer:
        return deg == 3 if vt[v] == 1 else deg > 3
    return deg == 4 if vt[v] == 1 else deg > 4


def validate(g: PlaneGraph, vt, et, v1: Optional[int] = None,
             v0: Optional[int] = None, v2: Optional[int] = None) -> list[str]:
    """All violations of the decoration conditions (empty if valid).

    With only v1 given, v0 and v2 are required to exist somewhere; with
    all three given, that rooting itself is checked.
    """
    problems: list[str] = []
    if g.genus != 0:
        problems.append("not a plane graph")
    if g.outer is None:
        return problems + ["no outer face marked"]
    if vertex_connectivity_capped(g, 2) < 2:
        problems.append("not 2-connected")
    for f, darts in enumerate(g.faces):
        if f != g.outer and len(darts) != 3:
            problems.append(f"inner face {f} has size {len(darts)}")
    for e in range(g.ne):
        u, w = g.edge_ends(e)
        if {et[e], vt[u], vt[w]} != {0, 1, 2}:
            problems.append(f"edge {e} types {{{et[e]},{vt[u]},{vt[w]}}}")
    for v in range(g.n):
        others = {0, 1, 2} - {vt[v]}
        for d in g.darts_at(v):
            if et[d >> 1] not in others:
                problems.append(f"edge type {et[d >> 1]} at vertex {v}")
            nd = g.nxt[d]
            if g.face_of[d] != g.outer and et[d >> 1] == et[nd >> 1]:
                problems.append(f"equal types around inner face at {v}")
    if problems:
        return problems

    outer_set = set(_outer_vertices(g))
    if v1 is not None and v1 not in outer_set:
        return [f"v1={v1} not on the outer face"]
    if v1 is not None:
        deg = g.degree(v1)
        if vt[v1] == 1 and deg != 2:
            problems.append(f"v1 of type 1 must have degree 2, has {deg}")
        if vt[v1] != 1 and deg <= 2:
            problems.append(f"v1 of type {vt[v1]} must have degree > 2")
    for v in range(g.n):
        if v in (v0, v1, v2):
            continue
        if v in outer_set:
            if (v0 is None or v2 is None) and vt[v] != 1:
                continue    # could still become v0 or v2
            if not _noncorner_ok(g, vt, v, outer=True):
                problems.append(f"outer vertex {v} violates degree rule")
        elif not _noncorner_ok(g, vt, v, outer=False):
            problems.append(f"inner vertex {v} violates degree rule")
    if problems:
        return problems

    if v0 is not None and v2 is not None:
        if len({v0, v1, v2}) != 3:
            problems.append("corners not distinct")
        elif vt[v0] == 1 or vt[v2] == 1:
            problems.append("v0 and v2 must not have type 1")
        elif not {v0, v2} <= outer_set:
            problems.append("corners must lie on the outer face")
        return problems

    if v1 is None:
        for cand in outer_set:
            deg = g.degree(cand)
            ok = deg == 2 if vt[cand] == 1 else deg > 2
            if ok and not validate(g, vt, et, cand):
                return []
        return ["no valid v1"]
    return [] if corner_pairs(g, vt, v1) else ["no valid v0/v2 assignment"]


def corner_pairs(g: PlaneGraph, vt, v1: int) -> list[tuple[int, int]]:
    """All valid {v0, v2} assignments for a fixed v1."""
    outer = _outer_vertices(g)
    forced = [v for v in outer
              if v != v1 and not _noncorner_ok(g, vt, v, outer=True)]
    if len(forced) > 2 or any(vt[v] == 1 for v in forced):
        return []
    cands = [v for v in outer if v != v1 and vt[v] != 1]
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if all(f in (a, b) for f in forced):
                pairs.append((a, b))
    return pairs


# -- connectivity class -----------------------------------------------------


def connectivity_class(self) -> int:
        return connectivity_class(self)


def inflation_rate(d: Decoration) -> int:
    return d.rate()


def _outer_vertices(g: PlaneGraph) -> list[int]:
    seen = []
    got = set()
    for dd in g.faces[g.outer]:
        v = g.org[dd]
        if v not in got:
            got.add(v)
            seen.append(v)
    return seen


def _noncorner_ok(g: PlaneGraph, vt, v: int, outer: bool) -> bool:
    deg = g.degree(v)
    if outer:
        return deg == 3 if vt[v] == 1 else deg > 3
    return deg == 4 if vt[v] == 1 else deg > 4


def validate(g: PlaneGraph, vt, et, v1: Optional[int] = None,
             v0: Optional[int] = None, v2: Optional[int] = None) -> list[str]:
    """All violations of the decoration conditions (empty if valid).

    With only v1 given, v0 and v2 are required to exist somewhere; with
    all three given, that rooting itself is checked.
    """
    problems: list[str] = []
    if g.genus != 0:
        problems.append("not a plane graph")
    if g.outer is None:
        return problems + ["no outer face marked"]
    if vertex_connectivity_capped(g, 2) < 2:
        problems.append("not 2-connected")
    for f, darts in enumerate(g.faces):
        if f != g.outer and len(darts) != 3:
            problems.append(f"inner face {f} has size {len(darts)}")
    for e in range(g.ne):
        u, w = g.edge_ends(e)
        if {et[e], vt[u], vt[w]} != {0, 1, 2}:
            problems.append(f"edge {e} types {{{et[e]},{vt[u]},{vt[w]}}}")
    for v in range(g.n):
        others = {0, 1, 2} - {vt[v]}
        for d in g.darts_at(v):
            if et[d >> 1] not in others:
                problems.append(f"edge type {et[d >> 1]} at vertex {v}")
            nd = g.nxt[d]
            if g.face_of[d] != g.outer and et[d >> 1] == et[nd >> 1]:
                problems.append(f"equal types around inner face at {v}")
    if problems:
        return problems

    outer_set = set(_outer_vertices(g))
    if v1 is not None and v1 not in outer_set:
        return [f"v1={v1} not on the outer face"]
    if v1 is not None:
        deg = g.degree(v1)
        if vt[v1] == 1 and deg != 2:
            problems.append(f"v1 of type 1 must have degree 2, has {deg}")
        if vt[v1] != 1 and deg <= 2:
            problems.append(f"v1 of type {vt[v1]} must have degree > 2")
    for v in range(g.n):
        if v in (v0, v1, v2):
            continue
        if v in outer_set:
            if (v0 is None or v2 is None) and vt[v] != 1:
                continue    # could still become v0 or v2
            if not _noncorner_ok(g, vt, v, outer=True):
                problems.append(f"outer vertex {v} violates degree rule")
        elif not _noncorner_ok(g, vt, v, outer=False):
            problems.append(f"inner vertex {v} violates degree rule")
    if problems:
        return problems

    if v0 is not None and v2 is not None:
        if len({v0, v1, v2}) != 3:
            problems.append("corners not distinct")
        elif vt[v0] == 1 or vt[v2] == 1:
            problems.append("v0 and v2 must not have type 1")
        elif not {v0, v2} <= outer_set:
            problems.append("corners must lie on the outer face")
        return problems

    if v1 is None:
        for cand in outer_set:
            deg = g.degree(cand)
            ok = deg == 2 if vt[cand] == 1 else deg > 2
            if ok and not validate(g, vt, et, cand):
                return []
        return ["no valid v1"]
    return [] if corner_pairs(g, vt, v1) else ["no valid v0/v2 assignment"]


def corner_pairs(g: PlaneGraph, vt, v1: int) -> list[tuple[int, int]]:
    """All valid {v0, v2} assignments for a fixed v1."""
    outer = _outer_vertices(g)
    forced = [v for v in outer
              if v != v1 and not _noncorner_ok(g, vt, v, outer=True)]
    if len(forced) > 2 or any(vt[v] == 1 for v in forced):
        return []
    cands = [v for v in outer if v != v1 and vt[v] != 1]
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if all(f in (a, b) for f in forced):
                pairs.append((a, b))
    return pairs


# -- connectivity class -----------------------------------------------------


def connectivity_class(self) -> int:
        return connectivity_class(self)


def inflation_rate(d: Decoration) -> int:
    return d.rate()


def _outer_vertices(g: PlaneGraph) -> list[int]:
    seen = []
    got = set()
    for dd in g.faces[g.outer]:
        v = g.org[dd]
        if v not in got:
            got.add(v)
            seen.append(v)
    return seen


def _noncorner_ok(g: PlaneGraph, vt, v: int, outer: bool) -> bool:
    deg = g.degree(v)
    if outer:
        return deg == 3 if vt[v] == 1 else deg > 3
    return deg == 4 if vt[v] == 1 else deg > 4


def validate(g: PlaneGraph, vt, et, v1: Optional[int] = None,
             v0: Optional[int] = None, v2: Optional[int] = None) -> list[str]:
    """All violations of the decoration conditions (empty if valid).

    With only v1 given, v0 and v2 are required to exist somewhere; with
    all three given, that rooting itself is checked.
    """
    problems: list[str] = []
    if g.genus != 0:
        problems.append("not a plane graph")
    if g.outer is None:
        return problems + ["no outer face marked"]
    if vertex_connectivity_capped(g, 2) < 2:
        problems.append("not 2-connected")
    for f, darts in enumerate(g.faces):
        if f != g.outer and len(darts) != 3:
            problems.append(f"inner face {f} has size {len(darts)}")
    for e in range(g.ne):
        u, w = g.edge_ends(e)
        if {et[e], vt[u], vt[w]} != {0, 1, 2}:
            problems.append(f"edge {e} types {{{et[e]},{vt[u]},{vt[w]}}}")
    for v in range(g.n):
        others = {0, 1, 2} - {vt[v]}
        for d in g.darts_at(v):
            if et[d >> 1] not in others:
                problems.append(f"edge type {et[d >> 1]} at vertex {v}")
            nd = g.nxt[d]
            if g.face_of[d] != g.outer and et[d >> 1] == et[nd >> 1]:
                problems.append(f"equal types around inner face at {v}")
    if problems:
        return problems

    outer_set = set(_outer_vertices(g))
    if v1 is not None and v1 not in outer_set:
        return [f"v1={v1} not on the outer face"]
    if v1 is not None:
        deg = g.degree(v1)
        if vt[v1] == 1 and deg != 2:
            problems.append(f"v1 of type 1 must have degree 2, has {deg}")
        if vt[v1] != 1 and deg <= 2:
            problems.append(f"v1 of type {vt[v1]} must have degree > 2")
    for v in range(g.n):
        if v in (v0, v1, v2):
            continue
        if v in outer_set:
            if (v0 is None or v2 is None) and vt[v] != 1:
                continue    # could still become v0 or v2
            if not _noncorner_ok(g, vt, v, outer=True):
                problems.append(f"outer vertex {v} violates degree rule")
        elif not _noncorner_ok(g, vt, v, outer=False):
            problems.append(f"inner vertex {v} violates degree rule")
    if problems:
        return problems

    if v0 is not None and v2 is not None:
        if len({v0, v1, v2}) != 3:
            problems.append("corners not distinct")
        elif vt[v0] == 1 or vt[v2] == 1:
            problems.append("v0 and v2 must not have type 1")
        elif not {v0, v2} <= outer_set:
            problems.append("corners must lie on the outer face")
        return problems

    if v1 is None:
        for cand in outer_set:
            deg = g.degree(cand)
            ok = deg == 2 if vt[cand] == 1 else deg > 2
            if ok and not validate(g, vt, et, cand):
                return []
        return ["no valid v1"]
    return [] if corner_pairs(g, vt, v1) else ["no valid v0/v2 assignment"]


def corner_pairs(g: PlaneGraph, vt, v1: int) -> list[tuple[int, int]]:
    """All valid {v0, v2} assignments for a fixed v1."""
    outer = _outer_vertices(g)
    forced = [v for v in outer
              if v != v1 and not _noncorner_ok(g, vt, v, outer=True)]
    if len(forced) > 2 or any(vt[v] == 1 for v in forced):
        return []
    cands = [v for v in outer if v != v1 and vt[v] != 1]
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if all(f in (a, b) for f in forced):
                pairs.append((a, b))
    return pairs


# -- connectivity class -----------------------------------------------------


def _type1_parallel(g: PlaneGraph, et) -> bool:
    seen = set()
    for e in range(g.ne):
        if et[e] != 1:
            continue
        key = tuple(sorted(g.edge_ends(e)))
        if key in seen:
            return True
        seen.add(key)
    return False


def _type1_cycles4(g: PlaneGraph, et) -> list[tuple[int, int, int, int]]:
    """4-cycles of the type-1 subgraph, as edge quadruples."""
    nbr: dict[int, list[tuple[int, int]]] = {}
    for e in range(g.ne):
        if et[e] == 1:
            u, w = g.edge_ends(e)
            nbr.setdefault(u, []).append((w, e))
            nbr.setdefault(w, []).append((u, e))
    cycles = []
    verts = sorted(nbr)
    for u in verts:
        for w in verts:
            if w <= u:
                continue
            between = [(x, e) for x, e in nbr[u]
                       if any(y == x for y, _ in nbr[w])]
            mids = sorted({x for x, _ in between})
            for ai in range(len(mids)):
                for bi in range(ai + 1, len(mids)):
                    a, b = mids[ai], mids[bi]
                    for _, e1 in [p for p in nbr[u] if p[0] == a]:
                        for _, e2 in [p for p in nbr[a] if p[0] == w]:
                            for _, e3 in [p for p in nbr[w] if p[0] == b]:
                                for _, e4 in [p for p in nbr[b] if p[0] == u]:
                                    cycles.append((e1, e2, e3, e4))
    return cycles


def _cycle_nonempty(g: PlaneGraph, et, cycle_edges: tuple[int, ...]) -> bool:
    """True when the type-1 subgraph has vertices strictly on both sides."""
    cyc = set(cycle_edges)
    cyc_verts = set()
    for e in cycle_edges:
        cyc_verts.update(g.edge_ends(e))
    t1_verts = set()
    for e in range(g.ne):
        if et[e] == 1:
            t1_verts.update(g.edge_ends(e))
    # flood faces on each side of the cycle
    d0 = 2 * cycle_edges[0]
    sides = []
    for start in (d0, d0 ^ 1):
        seen_faces = {g.face_of[start]}
        stack = [g.face_of[start]]
        verts = set()
        while stack:
            f = stack.pop()
            for dd in g.faces[f]:
                verts.add(g.org[dd])
                if (dd >> 1) in cyc:
                    continue
                f2 = g.face_of[dd ^ 1]
                if f2 not in seen_faces:
                    seen_faces.add(f2)
                    stack.append(f2)
        sides.append((verts - cyc_verts) & t1_verts)
    return bool(sides[0]) and bool(sides[1])


def has_nonempty_type1_4cycle(g: PlaneGraph, et) -> bool:
    return any(_cycle_nonempty(g, et, c) for c in _type1_cycles4(g, et))


def _sides_of(g: PlaneGraph, v0: int, v1: int, v2: int
              ) -> dict[int, set[int]]:
    """Side k is the outer path between the corners other than vk."""
    walk = g.faces[g.outer]
    verts = [g.org[d] for d in walk]
    m = len(verts)
    pos = {verts[i]: i for i in range(m)}
    sides: dict[int, set[int]] = {}
    corner_of_side = {0: (v1, v2), 1: (v0, v2), 2: (v0, v1)}
    for k, (a, b) in corner_of_side.items():
        ia, ib = pos[a], pos[b]
        # the arc from ia to ib not containing the third corner
        third = ({v0, v1, v2} - {a, b}).pop()
        arc = set()
        i = ia
        while True:
            arc.add(verts[i])
            if i == ib:
                break
            i = (i + 1) % m
        if third in arc and not third in (a, b):
            arc = set()
            i = ib
            while True:
                arc.add(verts[i])
                if i == ia:
                    break
                i = (i + 1) % m
        sides[k] = arc
    return sides


def _rooted_class(g: PlaneGraph, et, v0: int, v1: int, v2: int,
                  bad4: bool) -> int:
    sides = _sides_of(g, v0, v1, v2)
    outer_edges = {d >> 1 for d in g.faces[g.outer]}
    internal_t1 = [e for e in range(g.ne)
                   if et[e] == 1 and e not in outer_edges]
    # same side, corners included: both endpoints lie on one mirror axis
    for e in internal_t1:
        u, w = g.edge_ends(e)
        if any(u in s and w in s for s in sides.values()):
            return 1
    if bad4:
        return 2
    # between the interiors of the two sides through v1 (the perpendicular
    # axes); an endpoint at a corner does not close a short cycle
    int0 = sides[0] - {v1, v2}
    int2 = sides[2] - {v0, v1}
    for e in internal_t1:
        u, w = g.edge_ends(e)
        if (u in int0 and w in int2) or (u in int2 and w in int0):
            return 2
    return 3


def connectivity_class(d: Decoration) -> int:
    """Highest k in {1,2,3} for which this is a k-connected decoration.

    The class belongs to the rooted decoration (it depends on where the
    corners are placed); see lspgen.classify for the procedure.
    """
    from .classify import connectivity_class_of
    return connectivity_class_of(d)


# -- transforms and identity -------------------------------------------------


def swap02(d: Decoration) -> Decoration:
    """Exchanges types 0 and 2 everywhere (identity <-> dual pairing)."""
    sw = {0: 2, 1: 1, 2: 0}
    return Decoration(d.g, tuple(sw[t] for t in d.vt),
                      tuple(sw[t] for t in d.et), d.corners)


def mirror(d: Decoration) -> Decoration:
    """The mirror image; vertex ids, types and corners are unchanged."""
    return Decoration(d.g.mirrored(), d.vt, d.et, d.corners)


def _corner_marks(d: Decoration) -> tuple[int, ...]:
    v0, v1, v2 = d.corners
    marks = [0] * d.g.n
    marks[v0] = marks[v2] = 2      # {v0, v2} is an unordered pair
    marks[v1] = 1
    return tuple(marks)


def decoration_identity(d: Decoration) -> tuple[int, ...]:
    marks = _corner_marks(d)
    vlab = tuple(3 * t + m for t, m in zip(d.vt, marks))
    return canonical_code(d.g, "oriented", vlab=vlab, elab=d.et)


def type1_subgraph(d: Decoration) -> tuple[Predecoration, dict[int, int]]:
    """The predecoration of type-1 edges, plus old->new vertex mapping."""
    g, et = d.g, d.et
    keep_darts = [dd for dd in range(2 * g.ne) if et[dd >> 1] == 1]
    keep_set = set(keep_darts)
    verts = sorted({g.org[dd] for dd in keep_darts})
    vmap = {v: i for i, v in enumerate(verts)}
    # merge faces across removed edges to find the new outer face
    parent = list(range(len(g.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(g.ne):
        if et[e] != 1:
            a, b = find(g.face_of[2 * e]), find(g.face_of[2 * e + 1])
            if a != b:
                parent[a] = b
    outer_class = find(g.outer)

    dart_id = {dd: i for i, dd in enumerate(sorted(
        keep_darts, key=lambda dd: (dd >> 1, dd & 1)))}
    nd = len(keep_darts)
    org = [0] * nd
    nxt = [0] * nd
    for dd in keep_darts:
        org[dart_id[dd]] = vmap[g.org[dd]]
        e = g.nxt[dd]
        while e not in keep_set:
            e = g.nxt[e]
        nxt[dart_id[dd]] = dart_id[e]
    outer_dart = None
    for dd in keep_darts:
        if find(g.face_of[dd]) == outer_class:
            outer_dart = dart_id[dd]
            break
    assert outer_dart is not None
    sub = PlaneGraph(org, nxt, outer_dart)
    return Predecoration(sub), vmap


def canonicalized(d: Decoration) -> Decoration:
    """Relabels vertices into canonical-code order."""
    marks = _corner_marks(d)
    vlab = tuple(3 * t + m for t, m in zip(d.vt, marks))
    order = canonical_order(d.g, "oriented", vlab=vlab, elab=d.et)
    g2 = d.g.relabeled(order)
    vt2 = [0] * d.g.n
    for v in range(d.g.n):
        vt2[order[v]] = d.vt[v]
    # edge ids after relabeling: recompute by endpoints and position
    et2 = [0] * d.g.ne
    old_edges = {}
    for e in range(d.g.ne):
        old_edges.setdefault(
            tuple(sorted((order[d.g.org[2 * e]], order[d.g.org[2 * e + 1]]))),
            []).append(d.et[e])
    for e in range(g2.ne):
        key = tuple(sorted(g2.edge_ends(e)))
        et2[e] = old_edges[key].pop(0)
    corners = tuple(order[c] for c in d.corners)
    return Decoration(g2, tuple(vt2), tuple(et2), corners)  # type: ignore


# -- .deco text format -------------------------------------------------------


def write_deco(d: Decoration) -> str:
    d = canonicalized(d)
    g = d.g
    # rotate v0's list so that its first dart lies on the outer face
    rows = []
    for v in range(g.n):
        darts = list(g.darts_at(v))
        if v == d.corners[0]:
            for i, dd in enumerate(darts):
                if g.face_of[dd] == g.outer:
                    darts = darts[i:] + darts[:i]
                    break
        rows.append(darts)
    lines = [
        "deco 1",
        f"n {g.n} rate {d.rate()} k {d.connectivity_class()}",
        f"corners {d.corners[0] + 1} {d.corners[1] + 1} {d.corners[2] + 1}",
        "types " + " ".join(str(t) for t in d.vt),
    ]
    for v in range(g.n):
        nbrs = " ".join(str(g.org[dd ^ 1] + 1) for dd in rows[v])
        lines.append(f"rot {v + 1}: {nbrs}")
    done = set()
    for v in range(g.n):
        for dd in rows[v]:
            e = dd >> 1
            if e not in done:
                done.add(e)
                u, w = g.org[dd] + 1, g.org[dd ^ 1] + 1
                lines.append(f"et {u} {w} {d.et[e]}")
    return "\n".join(lines) + "\n"


class DecoFormatError(ValueError):
    pass


def read_deco(text: str) -> Decoration:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("deco "):
        raise DecoFormatError("missing deco header")
    if lines[0].split() != ["deco", "1"]:
        raise DecoFormatError(f"unsupported version: {lines[0]}")
    head = lines[1].split()
    if head[0] != "n" or head[2] != "rate" or head[4] != "k":
        raise DecoFormatError(f"bad size line: {lines[1]}")
    n, rate, kcls = int(head[1]), int(head[3]), int(head[5])
    cor = lines[2].split()
    if cor[0] != "corners":
        raise DecoFormatError("missing corners line")
    corners = tuple(int(x) - 1 for x in cor[1:4])
    typ = lines[3].split()
    if typ[0] != "types" or len(typ) != n + 1:
        raise DecoFormatError("bad types line")
    vt = tuple(int(x) for x in typ[1:])
    rot: dict[int, list[int]] = {}
    etypes: list[tuple[int, int, int]] = []
    for ln in lines[4:]:
        parts = ln.split()
        if parts[0] == "rot":
            v = int(parts[1].rstrip(":"))
            rot[v] = [int(x) for x in parts[2:]]
        elif parts[0] == "et":
            etypes.append((int(parts[1]), int(parts[2]), int(parts[3])))
        else:
            raise DecoFormatError(f"unexpected line: {ln}")
    if len(rot) != n:
        raise DecoFormatError("rotation lines missing")
    from .maps import build_from_rotations
    g0 = build_from_rotations(rot)
    # outer face: traversed from the first listed dart of v0
    v0 = corners[0]
    first_nbr = rot[v0 + 1][0] - 1
    d0 = next(dd for dd in g0.darts_at(v0) if g0.org[dd ^ 1] == first_nbr)
    g = PlaneGraph(g0.org, g0.nxt, d0)
    # edge types: multi-edges are listed in rotation order
    pools: dict[tuple[int, int], list[int]] = {}
    for u, w, t in etypes:
        pools.setdefault(tuple(sorted((u - 1, w - 1))), []).append(t)
    et = [0] * g.ne
    seen = set()
    for v in range(g.n):
        for dd in g.darts_at(v):
            e = dd >> 1
            if e not in seen:
                seen.add(e)
                key = tuple(sorted(g.edge_ends(e)))
                if key not in pools or not pools[key]:
                    raise DecoFormatError(f"edge type missing for {key}")
                et[e] = pools[key].pop(0)
    d = Decoration(g, vt, tuple(et), corners)  # type: ignore
    problems = validate(g, vt, tuple(et), corners[1], corners[0], corners[2])
    if problems:
        raise DecoFormatError("invalid decoration: " + "; ".join(problems))
    if d.rate() != rate:
        raise DecoFormatError(f"rate mismatch: {d.rate()} != {rate}")
    if d.connectivity_class() < kcls:
        raise DecoFormatError("connectivity class below declared value")
    return d
