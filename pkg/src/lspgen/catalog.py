"""Built-in named operations and seed polyhedra.

The ten classical operations are stored as decoration records; each was
produced by the generator and identified by applying it to the cube and
matching the classical result (truncated cube, cuboctahedron, ...).
subdivide is the 0/2-swap partner of chamfer, the remaining pairs are
mirror or swap partners of each other as their names suggest.
"""

from __future__ import annotations

from functools import lru_cache

from .decorations import Decoration, read_deco
from .maps import PlaneGraph, build_from_rotations

_DECO_TEXT = {
    "identity": """
deco 1
n 3 rate 1 k 3
corners 1 3 2
types 0 2 1
rot 1: 2 3
rot 2: 1 3
rot 3: 1 2
et 1 2 1
et 1 3 2
et 2 3 0
""",
    "dual": """
deco 1
n 3 rate 1 k 3
corners 3 2 1
types 0 1 2
rot 1: 3 2
rot 2: 1 3
rot 3: 1 2
et 1 3 1
et 1 2 2
et 2 3 0
""",
    "ambo": """
deco 1
n 4 rate 2 k 3
corners 2 1 3
types 0 2 2 1
rot 1: 2 3 4
rot 2: 4 1
rot 3: 1 4
rot 4: 1 3 2
et 1 2 1
et 1 3 1
et 1 4 2
et 2 4 0
et 3 4 0
""",
    "join": """
deco 1
n 4 rate 2 k 3
corners 4 2 1
types 0 2 1 0
rot 1: 2 3
rot 2: 1 3 4
rot 3: 1 4 2
rot 4: 3 2
et 1 2 1
et 1 3 2
et 2 3 0
et 2 4 1
et 3 4 2
""",
    "truncate": """
deco 1
n 5 rate 3 k 3
corners 2 3 4
types 0 2 1 2 1
rot 1: 3 4 5 2
rot 2: 5 1
rot 3: 1 4
rot 4: 1 3 5
rot 5: 1 4 2
et 1 3 2
et 1 4 1
et 1 5 2
et 1 2 1
et 2 5 0
et 3 4 0
et 4 5 0
""",
    "zip": """
deco 1
n 5 rate 3 k 3
corners 5 2 3
types 0 1 2 1 2
rot 1: 5 2 3 4
rot 2: 1 5
rot 3: 1 4
rot 4: 1 3 5
rot 5: 4 2 1
et 1 5 1
et 1 2 2
et 1 3 1
et 1 4 2
et 2 5 0
et 3 4 0
et 4 5 0
""",
    "needle": """
deco 1
n 5 rate 3 k 3
corners 1 5 4
types 0 1 2 0 1
rot 1: 2 3
rot 2: 1 3 4
rot 3: 1 5 4 2
rot 4: 2 3 5
rot 5: 3 4
et 1 2 2
et 1 3 1
et 2 3 0
et 2 4 2
et 3 5 0
et 3 4 1
et 4 5 2
""",
    "kiss": """
deco 1
n 5 rate 3 k 3
corners 4 5 1
types 0 2 1 0 1
rot 1: 2 3
rot 2: 1 3 4 5
rot 3: 1 4 2
rot 4: 3 5 2
rot 5: 2 4
et 1 2 1
et 1 3 2
et 2 3 0
et 2 4 1
et 2 5 0
et 3 4 2
et 4 5 2
""",
    "chamfer": """
deco 1
n 6 rate 4 k 3
corners 6 4 2
types 0 2 1 2 1 0
rot 1: 4 5 2 3
rot 2: 1 5
rot 3: 1 6 4
rot 4: 1 3 6 5
rot 5: 1 4 2
rot 6: 3 4
et 1 4 1
et 1 5 2
et 1 2 1
et 1 3 2
et 2 5 0
et 3 6 2
et 3 4 0
et 4 6 1
et 4 5 0
""",
    "subdivide": """
deco 1
n 6 rate 4 k 3
corners 2 1 6
types 0 2 1 2 1 0
rot 1: 2 3 4 5
rot 2: 5 1
rot 3: 1 6 4
rot 4: 1 3 6 5
rot 5: 1 4 2
rot 6: 3 4
et 1 2 1
et 1 3 2
et 1 4 1
et 1 5 2
et 2 5 0
et 3 6 2
et 3 4 0
et 4 6 1
et 4 5 0
""",
}

CONWAY_SYMBOL = {
    "identity": "S", "dual": "d", "ambo": "a", "join": "j",
    "truncate": "t", "zip": "z", "needle": "n", "kiss": "k",
    "chamfer": "c", "subdivide": "u",
}

OPERATION_NAMES = tuple(sorted(_DECO_TEXT))


@lru_cache(maxsize=None)
def lookup(name: str) -> Decoration:
    """The named decoration; raises KeyError for unknown names."""
    if name not in _DECO_TEXT:
        raise KeyError(f"unknown operation {name!r}; "
                       f"available: {', '.join(OPERATION_NAMES)}")
    return read_deco(_DECO_TEXT[name])


def _dual_table(g: PlaneGraph) -> dict[int, list[int]]:
    rot = {}
    for f, darts in enumerate(g.faces):
        rot[f + 1] = [g.face_of[d ^ 1] + 1 for d in darts]
    return rot


@lru_cache(maxsize=None)
def seed(name: str) -> PlaneGraph:
    """A named seed graph with its standard embedding."""
    if name == "k2":
        return build_from_rotations({1: [2], 2: [1]})
    if name == "tetrahedron":
        return build_from_rotations(
            {1: [2, 3, 4], 2: [1, 4, 3], 3: [1, 2, 4], 4: [1, 3, 2]})
    if name == "cube":
        return build_from_rotations({
            1: [2, 4, 5], 2: [3, 1, 6], 3: [4, 2, 7], 4: [1, 3, 8],
            5: [8, 6, 1], 6: [5, 7, 2], 7: [6, 8, 3], 8: [7, 5, 4]})
    if name == "octahedron":
        return build_from_rotations({
            1: [2, 3, 4, 5], 2: [1, 5, 6, 3], 3: [1, 2, 6, 4],
            4: [1, 3, 6, 5], 5: [1, 4, 6, 2], 6: [2, 5, 4, 3]})
    if name == "icosahedron":
        top, bot = 1, 12
        up = [2, 3, 4, 5, 6]
        lo = [7, 8, 9, 10, 11]
        rot = {top: up[::-1], bot: lo}
        for i in range(5):
            rot[up[i]] = [top, up[(i + 1) % 5], lo[(i + 1) % 5],
                          lo[i], up[(i - 1) % 5]]
            rot[lo[i]] = [bot, lo[(i - 1) % 5], up[(i - 1) % 5],
                          up[i], lo[(i + 1) % 5]]
        return build_from_rotations(rot)
    if name == "dodecahedron":
        return build_from_rotations(_dual_table(seed("icosahedron")))
    if name == "bowtie":
        return build_from_rotations(
            {1: [2, 3, 4, 5], 2: [3, 1], 3: [1, 2], 4: [5, 1], 5: [1, 4]})
    if name == "k4-minus-edge":
        return build_from_rotations(
            {1: [2, 4, 3], 2: [1, 3, 4], 3: [1, 2], 4: [2, 1]})
    raise KeyError(f"unknown seed {name!r}")


SEED_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron",
              "icosahedron", "k2", "bowtie", "k4-minus-edge")
