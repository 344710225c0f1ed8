"""Combinatorial maps for embedded graphs.

A plane (or higher-genus) embedded graph is stored as a rotation system on
darts (half-edges).  Darts are the integers ``0 .. 2E-1``; the two darts of
edge ``e`` are ``2e`` and ``2e+1``, so the edge involution is ``d ^ 1``.
``nxt[d]`` is the next dart counterclockwise around the origin vertex of
``d``.  Faces are the orbits of ``d -> prv[d ^ 1]``; with counterclockwise
rotations this traverses every face with the face on the *left* of each
dart.  An optional distinguished face is marked as the outer face.

The module also provides plantri-style breadth-first canonical codes (with
optional vertex/edge label channels and an optional outer-face restriction),
automorphism groups derived from them, and planar_code I/O.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Optional, Sequence

PLANAR_CODE_HEADER = b">>planar_code<<"


class MapError(ValueError):
    """Raised for structurally invalid rotation data."""


class PlaneGraph:
    """Immutable embedded multigraph given by a rotation system.

    Attributes:
        n: number of vertices (ids ``0 .. n-1``).
        ne: number of edges; there are ``2 * ne`` darts.
        org: tuple, dart -> origin vertex.
        nxt: tuple, dart -> next dart counterclockwise around the origin.
        prv: tuple, inverse of ``nxt``.
        faces: tuple of dart tuples, one orbit of ``d -> prv[d ^ 1]`` each.
        face_of: tuple, dart -> face index.
        outer: index of the outer face, or None.
        genus: genus computed from the Euler formula.
    """

    __slots__ = ("n", "ne", "org", "nxt", "prv", "faces", "face_of",
                 "outer", "genus", "_vdarts")

    def __init__(self, org: Sequence[int], nxt: Sequence[int],
                 outer_dart: Optional[int] = None):
        nd = len(org)
        if nd == 0 or nd % 2:
            raise MapError("dart count must be positive and even")
        if len(nxt) != nd:
            raise MapError("org and nxt must have equal length")
        self.org = tuple(org)
        self.nxt = tuple(nxt)
        self.ne = nd // 2
        self.n = max(org) + 1
        prv = [0] * nd
        seen = [False] * nd
        for d in range(nd):
            e = self.nxt[d]
            if not 0 <= e < nd or self.org[e] != self.org[d]:
                raise MapError("nxt must permute the darts of each vertex")
            prv[e] = d
        self.prv = tuple(prv)
        for d in range(nd):
            if self.org[d] == self.org[d ^ 1]:
                raise MapError(f"loop at vertex {self.org[d]}")
        # Each nxt-cycle must be a single vertex and cover all its darts.
        vdarts: list[list[int]] = [[] for _ in range(self.n)]
        for d in range(nd):
            if seen[d]:
                continue
            v = self.org[d]
            e = d
            while not seen[e]:
                seen[e] = True
                vdarts[v].append(e)
                e = self.nxt[e]
        if any(not ds for ds in vdarts):
            raise MapError("isolated vertex (vertex ids must be dense)")
        if sum(len(ds) for ds in vdarts) != nd:
            raise MapError("rotation cycles do not partition the darts")
        self._vdarts = tuple(tuple(ds) for ds in vdarts)

        face_of = [-1] * nd
        faces: list[tuple[int, ...]] = []
        for d in range(nd):
            if face_of[d] >= 0:
                continue
            orbit = []
            e = d
            while face_of[e] < 0:
                face_of[e] = len(faces)
                orbit.append(e)
                e = self.prv[e ^ 1]
            faces.append(tuple(orbit))
        self.faces = tuple(faces)
        self.face_of = tuple(face_of)

        euler = self.n - self.ne + len(faces)
        if euler % 2 or euler > 2:
            raise MapError(f"impossible Euler characteristic {euler}")
        self.genus = (2 - euler) // 2

        if not self._connected():
            raise MapError("graph is not connected")
        self.outer = None if outer_dart is None else self.face_of[outer_dart]

    def _connected(self) -> bool:
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for d in self._vdarts[v]:
                w = self.org[d ^ 1]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    # -- basic accessors ---------------------------------------------------

    def head(self, d: int) -> int:
        return self.org[d ^ 1]

    def darts_at(self, v: int) -> tuple[int, ...]:
        return self._vdarts[v]

    def degree(self, v: int) -> int:
        return len(self._vdarts[v])

    def fnext(self, d: int) -> int:
        return self.prv[d ^ 1]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.org[d ^ 1] for d in self._vdarts[v])

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def edge_ends(self, e: int) -> tuple[int, int]:
        return self.org[2 * e], self.org[2 * e + 1]

    def has_edge(self, u: int, v: int) -> bool:
        return any(self.org[d ^ 1] == v for d in self._vdarts[u])

    def with_outer(self, face: Optional[int]) -> "PlaneGraph":
        g = PlaneGraph(self.org, self.nxt,
                       None if face is None else self.faces[face][0])
        return g

    def mirrored(self) -> "PlaneGraph":
        """The mirror image: all rotations reversed, same dart ids."""
        outer_dart = None
        if self.outer is not None:
            outer_dart = self.faces[self.outer][0] ^ 1
        return PlaneGraph(self.org, self.prv, outer_dart)

    def relabeled(self, new_of_old: Sequence[int]) -> "PlaneGraph":
        """Renames vertices; dart ids are renumbered by new vertex order."""
        order = sorted(range(2 * self.ne),
                       key=lambda d: (new_of_old[self.org[d]], d))
        # keep rev = ^1: number edges by first-seen dart
        new_id = [-1] * (2 * self.ne)
        k = 0
        for d in order:
            if new_id[d] < 0:
                new_id[d] = 2 * k
                new_id[d ^ 1] = 2 * k + 1
                k += 1
        org = [0] * (2 * self.ne)
        nxt = [0] * (2 * self.ne)
        for d in range(2 * self.ne):
            org[new_id[d]] = new_of_old[self.org[d]]
            nxt[new_id[d]] = new_id[self.nxt[d]]
        outer_dart = None
        if self.outer is not None:
            outer_dart = new_id[self.faces[self.outer][0]]
        return PlaneGraph(org, nxt, outer_dart)

    def __repr__(self) -> str:
        return (f"PlaneGraph(n={self.n}, ne={self.ne}, "
                f"f={len(self.faces)}, genus={self.genus})")


def build_from_rotations(rotations: dict[int, Sequence[int]],
                         outer: Optional[Sequence[int]] = None) -> PlaneGraph:
    """Builds a PlaneGraph from per-vertex counterclockwise neighbor lists.

    Vertex ids may be arbitrary integers; they are densified in sorted
    order.  Each adjacency must appear on both endpoints with matching
    multiplicity.  Parallel edges are paired by the reversed-run rule
    (the k-th occurrence of ``v`` around ``u`` matches the (m-1-k)-th
    occurrence of ``u`` around ``v``), which requires the occurrences to
    be cyclically consecutive; other multi-edge patterns are rejected as
    ambiguous.

    Args:
        rotations: mapping vertex -> neighbor list in ccw order.
        outer: optional directed edge (u, v) whose left face is the outer
            face, in original vertex ids.
    """
    ids = sorted(rotations)
    index = {u: i for i, u in enumerate(ids)}
    rots = []
    for u in ids:
        try:
            rots.append([index[w] for w in rotations[u]])
        except KeyError as exc:
            raise MapError(f"neighbor {exc.args[0]} of {u} is not a vertex")
    n = len(ids)
    for u, row in enumerate(rots):
        if not row:
            raise MapError("isolated vertex")
        if any(w == u for w in row):
            raise MapError("loop present")

    # dart ids: consecutive per vertex in rotation order
    starts = [0] * n
    total = 0
    for u in range(n):
        starts[u] = total
        total += len(rots[u])
    org = [0] * total
    pos_nbr = [0] * total
    for u in range(n):
        for i, w in enumerate(rots[u]):
            org[starts[u] + i] = u
            pos_nbr[starts[u] + i] = w

    # pair darts: for each unordered pair, collect occurrence positions
    occ: dict[tuple[int, int], list[int]] = {}
    for d in range(total):
        occ.setdefault((org[d], pos_nbr[d]), []).append(d)
    rev = [-1] * total
    for (u, w), ds in sorted(occ.items()):
        if u > w:
            continue
        back = occ.get((w, u))
        if back is None or len(back) != len(ds):
            raise MapError(f"inconsistent rotations between {u} and {w}")
        m = len(ds)
        if m == 1:
            rev[ds[0]] = back[0]
            rev[back[0]] = ds[0]
            continue
        # multiplicity: occurrences must be cyclically consecutive
        ds2 = _consecutive_run(ds, starts[u], len(rots[u]))
        back2 = _consecutive_run(back, starts[w], len(rots[w]))
        if ds2 is None or back2 is None:
            raise MapError(f"ambiguous parallel edges between {u} and {w}")
        for k in range(m):
            a, b = ds2[k], back2[m - 1 - k]
            rev[a] = b
            rev[b] = a

    # renumber so that rev = ^1
    new_id = [-1] * total
    k = 0
    for d in range(total):
        if new_id[d] < 0:
            new_id[d] = 2 * k
            new_id[rev[d]] = 2 * k + 1
            k += 1
    org2 = [0] * total
    nxt2 = [0] * total
    for u in range(n):
        deg = len(rots[u])
        for i in range(deg):
            d = starts[u] + i
            org2[new_id[d]] = u
            nxt2[new_id[d]] = new_id[starts[u] + (i + 1) % deg]
    outer_dart = None
    if outer is not None:
        u, w = index[outer[0]], index[outer[1]]
        for i, x in enumerate(rots[u]):
            if x == w:
                outer_dart = new_id[starts[u] + i]
                break
        if outer_dart is None:
            raise MapError("outer edge not present")
    return PlaneGraph(org2, nxt2, outer_dart)


def _consecutive_run(ds: list[int], start: int, deg: int) -> Optional[list[int]]:
    """Orders dart positions as one cyclic run, or None if not consecutive."""
    offs = sorted((d - start) for d in ds)
    m = len(offs)
    for r in range(m):
        rot = offs[r:] + [o + deg for o in offs[:r]]
        if all(rot[i + 1] - rot[i] == 1 for i in range(m - 1)):
            return [start + (o % deg) for o in rot]
    return None


def to_rotations(g: PlaneGraph) -> dict[int, list[int]]:
    """Per-vertex ccw neighbor lists with 1-based vertex ids."""
    return {v + 1: [g.org[d ^ 1] + 1 for d in g.darts_at(v)]
            for v in range(g.n)}


# -- canonical codes -------------------------------------------------------


def _start_darts(g: PlaneGraph, mirror: bool) -> Iterable[int]:
    if g.outer is None:
        return range(2 * g.ne)
    if not mirror:
        return g.faces[g.outer]
    return [d ^ 1 for d in g.faces[g.outer]]


def _bfs_code(g: PlaneGraph, d0: int, mirror: bool,
              vlab: Optional[Sequence[int]],
              elab: Optional[Sequence[int]]) -> tuple[int, ...]:
    org = g.org
    step = g.prv if mirror else g.nxt
    lab = [0] * g.n
    entry = [0] * g.n
    order = [org[d0]]
    lab[org[d0]] = 1
    entry[org[d0]] = d0
    code = [g.n, g.ne]
    if vlab is not None:
        code.append(vlab[org[d0]])
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        d = entry[v]
        while True:
            w = org[d ^ 1]
            if not lab[w]:
                order.append(w)
                lab[w] = len(order)
                entry[w] = d ^ 1
            code.append(lab[w])
            if elab is not None:
                code.append(elab[d >> 1])
            if vlab is not None:
                code.append(vlab[w])
            d = step[d]
            if d == entry[v]:
                break
        code.append(0)
    return tuple(code)


def dart_sequence(g: PlaneGraph, d0: int, mirror: bool) -> list[int]:
    """The darts in the order the BFS code visits them (each exactly once)."""
    org = g.org
    step = g.prv if mirror else g.nxt
    lab = [0] * g.n
    entry = [0] * g.n
    order = [org[d0]]
    lab[org[d0]] = 1
    entry[org[d0]] = d0
    seq = []
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        d = entry[v]
        while True:
            w = org[d ^ 1]
            if not lab[w]:
                order.append(w)
                lab[w] = len(order)
                entry[w] = d ^ 1
            seq.append(d)
            d = step[d]
            if d == entry[v]:
                break
    return seq


def canonical_data(g: PlaneGraph, mode: str = "full",
                   vlab: Optional[Sequence[int]] = None,
                   elab: Optional[Sequence[int]] = None
                   ) -> tuple[tuple[int, ...], list[tuple[int, bool]]]:
    """Canonical code and every (start dart, mirror) pair achieving it.

    mode "full" minimizes over both orientations, "oriented" over
    counterclockwise readings only.  When ``g.outer`` is set, start darts
    are restricted to the outer face, so equality of codes means
    isomorphism preserving the outer face.
    """
    if mode not in ("full", "oriented"):
        raise ValueError(f"unknown mode {mode!r}")
    best = None
    hits: list[tuple[int, bool]] = []
    mirrors = (False, True) if mode == "full" else (False,)
    for mirror in mirrors:
        for d0 in _start_darts(g, mirror):
            code = _bfs_code(g, d0, mirror, vlab, elab)
            if best is None or code < best:
                best = code
                hits = [(d0, mirror)]
            elif code == best:
                hits.append((d0, mirror))
    assert best is not None
    return best, hits


def canonical_code(g: PlaneGraph, mode: str = "full",
                   vlab: Optional[Sequence[int]] = None,
                   elab: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    return canonical_data(g, mode, vlab, elab)[0]


def canonical_order(g: PlaneGraph, mode: str = "full",
                    vlab: Optional[Sequence[int]] = None,
                    elab: Optional[Sequence[int]] = None) -> list[int]:
    """new_of_old vertex relabeling induced by the canonical BFS."""
    _, hits = canonical_data(g, mode, vlab, elab)
    d0, mirror = hits[0]
    seq = dart_sequence(g, d0, mirror)
    new_of_old = [-1] * g.n
    k = 0
    for d in seq:
        v = g.org[d]
        if new_of_old[v] < 0:
            new_of_old[v] = k
            k += 1
    return new_of_old


def _dart_map(g: PlaneGraph, ref: tuple[int, bool],
              other: tuple[int, bool]) -> tuple[int, ...]:
    seq_a = dart_sequence(g, *ref)
    seq_b = dart_sequence(g, *other)
    gamma = [0] * (2 * g.ne)
    for a, b in zip(seq_a, seq_b):
        gamma[a] = b
    return tuple(gamma)


def automorphisms(g: PlaneGraph, mode: str = "full",
                  vlab: Optional[Sequence[int]] = None,
                  elab: Optional[Sequence[int]] = None,
                  fixed: Optional[Iterable[int]] = None
                  ) -> list[tuple[int, ...]]:
    """The automorphism group as dart permutations.

    Respects labels and the outer face; ``fixed`` vertices must be mapped
    to themselves.  The identity is always included.
    """
    _, hits = canonical_data(g, mode, vlab, elab)
    ref = hits[0]
    # a map that equals its own mirror yields each permutation twice
    perms = list(dict.fromkeys(_dart_map(g, ref, h) for h in hits))
    if fixed is not None:
        fix = list(fixed)
        perms = [p for p in perms
                 if all(g.org[p[g.darts_at(v)[0]]] == v for v in fix)]
    return perms


def automorphisms_flagged(g: PlaneGraph, mode: str = "full",
                          vlab: Optional[Sequence[int]] = None,
                          elab: Optional[Sequence[int]] = None
                          ) -> list[tuple[tuple[int, ...], bool]]:
    """Automorphisms with their orientation-reversing flag.

    A degenerate map that equals its own mirror can realize the same dart
    permutation in both orientations; both (perm, flag) pairs are kept
    because they act differently on edge sides.
    """
    _, hits = canonical_data(g, mode, vlab, elab)
    ref = hits[0]
    out: dict[tuple[tuple[int, ...], bool], None] = {}
    for h in hits:
        out.setdefault((_dart_map(g, ref, h), h[1] != ref[1]), None)
    return list(out)


def vertex_mapping(g: PlaneGraph, perm: Sequence[int]) -> list[int]:
    """The vertex permutation induced by a dart permutation."""
    out = [-1] * g.n
    for d in range(2 * g.ne):
        out[g.org[d]] = g.org[perm[d]]
    return out


def automorphism_orbits(g: PlaneGraph, mode: str = "full",
                        vlab: Optional[Sequence[int]] = None,
                        elab: Optional[Sequence[int]] = None,
                        fixed: Optional[Iterable[int]] = None
                        ) -> tuple[list[list[int]], int]:
    """Orbits of the automorphism group on darts, plus the group order."""
    perms = automorphisms(g, mode, vlab, elab, fixed)
    parent = list(range(2 * g.ne))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for d in range(2 * g.ne):
            a, b = find(d), find(p[d])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for d in range(2 * g.ne):
        groups.setdefault(find(d), []).append(d)
    return list(groups.values()), len(perms)


def random_relabeling(g: PlaneGraph, rng: random.Random) -> PlaneGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabeled(perm)


# -- brute-force oracles (small graphs) ------------------------------------


def isomorphisms_brute(a: PlaneGraph, b: PlaneGraph, mode: str = "full"
                       ) -> Iterator[list[int]]:
    """All vertex bijections a -> b compatible with the rotation systems.

    Exponential; intended as an independent oracle for graphs with at
    most ~8 vertices.  Ignores outer faces and labels.
    """
    if a.n != b.n or a.ne != b.ne:
        return
    dega = sorted(a.degree(v) for v in range(a.n))
    degb = sorted(b.degree(v) for v in range(b.n))
    if dega != degb:
        return
    mirrors = (False, True) if mode == "full" else (False,)
    seen = set()
    for mirror in mirrors:
        d0 = 0
        for e0 in range(2 * b.ne):
            m = _try_map(a, b, d0, e0, mirror)
            if m is not None and tuple(m) not in seen:
                seen.add(tuple(m))
                yield m


def _try_map(a: PlaneGraph, b: PlaneGraph, d0: int, e0: int,
             mirror: bool) -> Optional[list[int]]:
    stepb = b.prv if mirror else b.nxt
    dart_map = [-1] * (2 * a.ne)
    vmap = [-1] * a.n
    stack = [(d0, e0)]
    while stack:
        d, e = stack.pop()
        if dart_map[d] >= 0:
            if dart_map[d] != e:
                return None
            continue
        va, vb = a.org[d], b.org[e]
        if vmap[va] >= 0 and vmap[va] != vb:
            return None
        if a.degree(va) != b.degree(vb):
            return None
        vmap[va] = vb
        dart_map[d] = e
        stack.append((d ^ 1, e ^ 1))
        stack.append((a.nxt[d], stepb[e]))
    if any(x < 0 for x in dart_map):
        # disconnected never happens (graphs are connected)
        return None
    return vmap


def _articulation_or_disconnected(adj: list[list[int]],
                                  skip: int = -1) -> bool:
    """True when the graph minus `skip` is disconnected or has a cut
    vertex (iterative lowpoint computation)."""
    n = len(adj)
    order = [-1] * n
    low = [0] * n
    verts = [v for v in range(n) if v != skip]
    if len(verts) <= 1:
        return False
    root = verts[0]
    count = 0
    parent = [-1] * n
    stack = [(root, 0)]
    order[root] = low[root] = count
    count += 1
    root_children = 0
    while stack:
        v, i = stack.pop()
        if i < len(adj[v]):
            stack.append((v, i + 1))
            w = adj[v][i]
            if w == skip:
                continue
            if order[w] < 0:
                parent[w] = v
                order[w] = low[w] = count
                count += 1
                if v == root:
                    root_children += 1
                stack.append((w, 0))
            elif w != parent[v]:
                if order[w] < low[v]:
                    low[v] = order[w]
        elif parent[v] >= 0:
            p = parent[v]
            if low[v] < low[p]:
                low[p] = low[v]
            if p != root and low[v] >= order[p]:
                return True
    if count != len(verts):
        return True
    return root_children >= 2


def vertex_connectivity_capped(g: PlaneGraph, cap: int = 3) -> int:
    """Vertex connectivity, capped (a graph is k-connected when it has
    more than k vertices and no separating set of fewer than k)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        seen = set()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                adj[v].append(w)
    if g.n < 2:
        return 0
    if _articulation_or_disconnected(adj) or g.n == 2 or cap == 1:
        return 1 if cap >= 1 else cap
    if g.n == 3 or cap == 2:
        return 2
    for v in range(g.n):
        if _articulation_or_disconnected(adj, skip=v):
            return 2
    return 3


# -- planar_code -----------------------------------------------------------


def write_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    """Encodes graphs in planar_code (unsigned bytes, ccw rotations)."""
    out = bytearray()
    if header:
        out += PLANAR_CODE_HEADER
    for g in graphs:
        if g.n > 255:
            raise MapError("planar_code supports at most 255 vertices")
        out.append(g.n)
        for v in range(g.n):
            for d in g.darts_at(v):
                out.append(g.org[d ^ 1] + 1)
            out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> list[PlaneGraph]:
    """Decodes a planar_code byte stream (optional ASCII header)."""
    pos = 0
    if data.startswith(PLANAR_CODE_HEADER):
        pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise MapError("planar_code record with zero vertices")
        rot: dict[int, list[int]] = {}
        for v in range(1, n + 1):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise MapError("truncated planar_code stream")
                byte = data[pos]
                pos += 1
                if byte == 0:
                    break
                if byte > n:
                    raise MapError(f"vertex index {byte} out of range (n={n})")
                nbrs.append(byte)
            rot[v] = nbrs
        graphs.append(build_from_rotations(rot))
    return graphs
