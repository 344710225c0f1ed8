import random

import pytest

from lspgen.maps import (MapError, automorphism_orbits, build_from_rotations,
                         canonical_code, isomorphisms_brute, read_planar_code,
                         random_relabeling, to_rotations,
                         vertex_connectivity_capped, write_planar_code)

CUBE = {1: [2, 4, 5], 2: [3, 1, 6], 3: [4, 2, 7], 4: [1, 3, 8],
        5: [8, 6, 1], 6: [5, 7, 2], 7: [6, 8, 3], 8: [7, 5, 4]}
OCTA = {1: [2, 3, 4, 5], 2: [1, 5, 6, 3], 3: [1, 2, 6, 4],
        4: [1, 3, 6, 5], 5: [1, 4, 6, 2], 6: [2, 5, 4, 3]}


def cube():
    return build_from_rotations(CUBE)


def test_cube_counts():
    g = cube()
    assert (g.n, g.ne, len(g.faces)) == (8, 12, 6)
    assert g.genus == 0
    assert all(len(f) == 4 for f in g.faces)


def test_single_edge():
    g = build_from_rotations({1: [2], 2: [1]})
    assert (g.n, g.ne, len(g.faces), g.genus) == (2, 1, 1, 0)


def test_inconsistent_rotations_rejected():
    with pytest.raises(MapError):
        build_from_rotations({1: [2], 2: []})
    with pytest.raises(MapError):
        build_from_rotations({1: [2, 3], 2: [1], 3: []})


def test_loop_rejected():
    with pytest.raises(MapError):
        build_from_rotations({1: [1, 2], 2: [1]})


def test_face_size_sum_is_dart_count():
    for rot in (CUBE, OCTA, {1: [2], 2: [1, 3], 3: [2]}):
        g = build_from_rotations(rot)
        assert sum(len(f) for f in g.faces) == 2 * g.ne
        assert g.n - g.ne + len(g.faces) == 2 - 2 * g.genus


def test_canonical_code_class_function():
    g = cube()
    rng = random.Random(42)
    base = canonical_code(g)
    for _ in range(1000):
        assert canonical_code(random_relabeling(g, rng)) == base


def test_canonical_code_distinguishes():
    assert canonical_code(cube()) != canonical_code(build_from_rotations(OCTA))


def test_cube_automorphisms_vs_bruteforce():
    g = cube()
    _, order_full = automorphism_orbits(g, "full")
    _, order_op = automorphism_orbits(g, "oriented")
    assert order_full == 48
    assert order_op == 24
    assert sum(1 for _ in isomorphisms_brute(g, g, "full")) == 48
    assert sum(1 for _ in isomorphisms_brute(g, g, "oriented")) == 24


def test_small_graph_groups_match_bruteforce():
    graphs = [
        {1: [2], 2: [1, 3], 3: [2]},                       # path
        {1: [2, 3], 2: [1, 3], 3: [1, 2]},                 # triangle
        {1: [2, 3, 4], 2: [1], 3: [1], 4: [1]},            # star
        OCTA,
    ]
    for rot in graphs:
        g = build_from_rotations(rot)
        _, order = automorphism_orbits(g, "full")
        assert order == sum(1 for _ in isomorphisms_brute(g, g, "full"))


def test_path_orbits():
    g = build_from_rotations({1: [2], 2: [1, 3], 3: [2]})
    orbits, order = automorphism_orbits(g, "full")
    assert order == 2
    end_darts = {d for d in range(2 * g.ne)
                 if g.degree(g.org[d]) == 1 or g.degree(g.org[d ^ 1]) == 1}
    assert end_darts == set(range(4))
    assert len(orbits) == 2


def test_fixed_vertices_restrict_group():
    g = cube()
    perms = automorphism_orbits(g, "full", fixed=[0])[1]
    assert perms == 6    # stabilizer of a cube vertex


def test_planar_code_round_trip():
    gs = [cube(), build_from_rotations(OCTA),
          build_from_rotations({1: [2], 2: [1, 3], 3: [2]})]
    data = write_planar_code(gs)
    back = read_planar_code(data)
    assert len(back) == 3
    for a, b in zip(gs, back):
        assert canonical_code(a) == canonical_code(b)


def test_planar_code_no_header():
    data = write_planar_code([cube()], header=False)
    assert canonical_code(read_planar_code(data)[0]) == canonical_code(cube())


def test_planar_code_errors():
    with pytest.raises(MapError):
        read_planar_code(bytes([3, 2, 0, 1]))       # truncated
    with pytest.raises(MapError):
        read_planar_code(bytes([2, 9, 0, 1, 0]))    # index out of range


def test_multigraph_round_trip():
    theta = build_from_rotations({1: [2, 2, 2], 2: [1, 1, 1]})
    assert (theta.n, theta.ne, len(theta.faces)) == (2, 3, 3)
    back = read_planar_code(write_planar_code([theta]))[0]
    assert canonical_code(back) == canonical_code(theta)


def test_connectivity_caps():
    assert vertex_connectivity_capped(cube()) == 3
    assert vertex_connectivity_capped(build_from_rotations({1: [2], 2: [1]})) == 1
    k4e = build_from_rotations({1: [2, 4, 3], 2: [1, 3, 4], 3: [1, 2], 4: [2, 1]})
    assert vertex_connectivity_capped(k4e) == 2


def test_to_rotations_round_trip():
    g = cube()
    assert canonical_code(build_from_rotations(to_rotations(g))) == canonical_code(g)
