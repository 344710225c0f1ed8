import pytest

from lspgen.catalog import lookup, seed
from lspgen.chambers import (apply_decoration, barycentric_subdivision,
                             connectivity_of_chamber_system, decorate_chambers,
                             extract_original)
from lspgen.maps import (MapError, automorphism_orbits, build_from_rotations,
                         canonical_code, vertex_connectivity_capped)


def test_barycentric_cube():
    cs = barycentric_subdivision(seed("cube"))
    assert (cs.g.n, cs.g.ne, len(cs.g.faces)) == (26, 72, 48)
    assert cs.g.n - cs.g.ne + len(cs.g.faces) == 2
    cs.check()   # every chamber has corner types {0,1,2}


def test_barycentric_single_edge():
    cs = barycentric_subdivision(seed("k2"))
    assert cs.g.n == 4
    assert len(cs.g.faces) == 4


def test_barycentric_triangle_count_is_4e():
    for name in ("tetrahedron", "cube", "bowtie", "k4-minus-edge"):
        g = seed(name)
        cs = barycentric_subdivision(g)
        assert len(cs.g.faces) == 4 * g.ne


def test_extract_round_trip():
    for name in ("cube", "tetrahedron", "bowtie", "k2", "icosahedron"):
        g = seed(name)
        cs = barycentric_subdivision(g)
        assert canonical_code(extract_original(cs)) == canonical_code(g)


def test_connectivity_classification():
    assert connectivity_of_chamber_system(
        barycentric_subdivision(seed("cube"))) == 3
    assert connectivity_of_chamber_system(
        barycentric_subdivision(seed("bowtie"))) == 1
    assert connectivity_of_chamber_system(
        barycentric_subdivision(seed("k4-minus-edge"))) == 2


def test_connectivity_matches_cut_search_on_small_seeds():
    graphs = {
        "path3": {1: [2], 2: [1, 3], 3: [2, 4], 4: [3]},
        "square": {1: [2, 4], 2: [3, 1], 3: [4, 2], 4: [1, 3]},
        "k4": {1: [2, 3, 4], 2: [1, 4, 3], 3: [1, 2, 4], 4: [1, 3, 2]},
        "two-triangles": {1: [2, 3, 4, 5], 2: [3, 1], 3: [1, 2],
                          4: [5, 1], 5: [1, 4]},
    }
    for name in ("tetrahedron", "cube", "octahedron", "k4-minus-edge",
                 "bowtie", "icosahedron"):
        graphs[name] = None
    for name, rot in graphs.items():
        g = seed(name) if rot is None else build_from_rotations(rot)
        if g.n > 12:
            continue
        expect = min(3, vertex_connectivity_capped(g))
        assert connectivity_of_chamber_system(
            barycentric_subdivision(g)) == expect, name


def test_apply_identity_and_dual():
    cube = seed("cube")
    assert canonical_code(apply_decoration(cube, lookup("identity"))) \
        == canonical_code(cube)
    assert canonical_code(apply_decoration(cube, lookup("dual"))) \
        == canonical_code(seed("octahedron"))


def test_apply_ambo_cuboctahedron():
    res = apply_decoration(seed("cube"), lookup("ambo"))
    assert (res.n, res.ne, len(res.faces)) == (12, 24, 14)
    sizes = sorted(len(f) for f in res.faces)
    assert sizes.count(3) == 8 and sizes.count(4) == 6


def test_decorated_chambers_form_chamber_system():
    cs = decorate_chambers(seed("tetrahedron"), lookup("truncate"))
    cs.check()
    assert len(cs.g.faces) == 4 * seed("tetrahedron").ne * 3


def test_edge_inflation_law():
    for name in ("identity", "ambo", "truncate", "chamfer"):
        d = lookup(name)
        for s in ("tetrahedron", "cube", "bowtie"):
            g = seed(s)
            assert apply_decoration(g, d).ne == d.rate() * g.ne
    # a single edge works whenever the result stays loop-free
    assert apply_decoration(seed("k2"), lookup("identity")).ne == 1


def test_degenerate_seed_rejected():
    # ambo of a single edge would identify both endpoints of each new
    # edge; the loop-free contract turns this into an error
    with pytest.raises(MapError):
        apply_decoration(seed("k2"), lookup("ambo"))


def test_symmetry_preservation():
    for name in ("ambo", "truncate", "kiss"):
        d = lookup(name)
        for s in ("tetrahedron", "cube"):
            g = seed(s)
            res = apply_decoration(g, d)
            _, aut_g = automorphism_orbits(g, "full")
            _, aut_res = automorphism_orbits(res, "full")
            assert aut_res % aut_g == 0


def test_connectivity_preservation():
    seeds = {"bowtie": 1, "k4-minus-edge": 2, "cube": 3}
    for name in ("identity", "ambo", "truncate", "chamfer"):
        d = lookup(name)
        for s, k in seeds.items():
            res = apply_decoration(seed(s), d)
            assert vertex_connectivity_capped(res, k) >= k, (name, s)


def test_genus_guard():
    from lspgen.maps import PlaneGraph
    # theta graph embedded on the torus: both rotations in the same order
    torus = PlaneGraph([0, 1, 0, 1, 0, 1], [2, 3, 4, 5, 0, 1])
    assert torus.genus == 1
    with pytest.raises(MapError):
        connectivity_of_chamber_system(barycentric_subdivision(torus))
