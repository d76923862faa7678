import random

import numpy as np
import pytest

from logskel.complexes import (
    ComplexError,
    GroupAction,
    SimplicialComplex,
    barycentric_subdivision,
    character_variety_complex,
    character_variety_homology,
    cycle_complex,
    homology,
    join,
    join_all,
    link_complex,
    quotient,
    quotient_homology,
    simplex_boundary_complex,
    sphere_profile,
    sphere_quotient_map_check,
    stellar_subdivide_until_simplicial,
    tate_strata,
)
from logskel.polyhedra import Cone, Fan, fan_p2


# -- link complexes ---------------------------------------------------------

def test_link_p2_is_circle():
    lk = link_complex(fan_p2())
    assert len(lk.vertices) == 3
    assert homology(lk) == sphere_profile(1)


def test_link_single_ray_is_point():
    f = Fan(2, [(1, 0)], [frozenset({0})])
    lk = link_complex(f)
    assert len(lk.vertices) == 1
    assert lk.dim() == 0


def test_link_octant_contractible():
    f = Fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [frozenset({0, 1, 2})])
    lk = link_complex(f)
    assert homology(lk).degrees[0][0] == 1
    assert all(r == 0 and not t for r, t in homology(lk).degrees[1:])


def test_link_nonsimplicial_cone_subdivides():
    # cone over a square: one stellar ray makes four triangles
    f = Fan(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)],
            [frozenset({0, 1, 2, 3})])
    out = stellar_subdivide_until_simplicial(f)
    assert all(out.cone_geometry(c).is_simplicial() for c in out.cones)
    lk = link_complex(f)
    prof = homology(lk)
    assert prof.degrees[0][0] == 1 and all(r == 0 for r, _ in prof.degrees[1:])


def test_link_of_product_fan_is_join_of_links():
    from logskel.polyhedra import fan_p1xp1, product_fan

    left = link_complex(fan_p2())
    right = link_complex(fan_p1xp1())
    prod = link_complex(product_fan(fan_p2(), fan_p1xp1()))
    assert homology(prod) == homology(join(left, right))


# -- joins --------------------------------------------------------------------

def test_join_s0_s0_is_square():
    s0 = SimplicialComplex.from_facets([(0,), (1,)])
    j = join(s0, s0)
    assert homology(j) == sphere_profile(1)
    assert len(j.facets) == 4


def test_join_of_two_triangles_is_s3():
    t = cycle_complex(3)
    assert homology(join(t, t)) == sphere_profile(3)


def test_join_with_point_is_cone():
    t = cycle_complex(3)
    prof = homology(join(t, SimplicialComplex.from_facets([("p",)])))
    assert prof.degrees[0][0] == 1
    assert all(r == 0 and not tor for r, tor in prof.degrees[1:])


def test_join_homology_rule_through_s5():
    models = {
        0: [SimplicialComplex.from_facets([(0,), (1,)])],
        1: [cycle_complex(3), cycle_complex(4), cycle_complex(5)],
        2: [simplex_boundary_complex(3)],
        3: [simplex_boundary_complex(4)],
        4: [simplex_boundary_complex(5)],
    }
    rng = random.Random(83)
    for _ in range(200):
        a = rng.choice([0, 1, 2, 3])
        b = rng.randint(0, 4 - a)
        left = rng.choice(models[a])
        right = rng.choice(models[b])
        assert homology(join(left, right)) == sphere_profile(a + b + 1)


# -- homology ------------------------------------------------------------------

def test_boundary_of_3_simplex():
    prof = homology(simplex_boundary_complex(3))
    assert prof == sphere_profile(2)


def test_three_cycle():
    assert homology(cycle_complex(3)) == sphere_profile(1)


def test_join_of_three_squares_is_s5():
    j = join_all([cycle_complex(4)] * 3)
    prof = homology(j)
    assert prof == sphere_profile(5)
    # cross-check the Euler characteristic against the f-vector
    assert j.euler_characteristic() == 0


def test_torsion_detected_rp2():
    rp2 = SimplicialComplex.from_facets([
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)])
    prof = homology(rp2)
    assert prof.degrees[0] == (1, [])
    assert prof.degrees[1] == (0, [2])
    assert prof.degrees[2] == (0, [])


def test_barycentric_subdivision_preserves_homology():
    for k in (cycle_complex(4), simplex_boundary_complex(3),
              join(cycle_complex(3), SimplicialComplex.from_facets([("p",)]))):
        assert homology(barycentric_subdivision(k)) == homology(k)


# -- quotients --------------------------------------------------------------------

def test_quotient_trivial_group_identity():
    k = cycle_complex(4)
    assert quotient(k, []) == k


def test_quotient_antipodal_circle():
    k = cycle_complex(4)
    anti = {0: 2, 1: 3, 2: 0, 3: 1}
    q = quotient(k, [anti])
    assert homology(q) == sphere_profile(1)
    assert quotient_homology(k, [anti]) == sphere_profile(1)


def test_quotient_swap_join_is_s3():
    k = join_all([cycle_complex(4)] * 2)
    swap = {(i, v): (1 - i, v) for (i, v) in k.vertices}
    q = quotient(k, [swap])
    assert homology(q) == sphere_profile(3)
    assert quotient_homology(k, [swap]) == sphere_profile(3)


def test_quotient_euler_characteristic_equals_orbit_count_sum():
    from logskel.complexes import _OrbitCells

    k = join_all([cycle_complex(4)] * 2)
    swap = {(i, v): (1 - i, v) for (i, v) in k.vertices}
    action = GroupAction(k, [swap])
    cells = _OrbitCells(k, action)
    counts = cells.cell_counts()
    alt = sum((-1) ** d * c for d, c in enumerate(counts))
    assert quotient(k, [swap]).euler_characteristic() == alt


def test_non_simplicial_action_rejected():
    k = cycle_complex(4)
    bad = {0: 0, 1: 2, 2: 1, 3: 3}  # maps the edge {0,1} to the non-edge {0,2}
    with pytest.raises(ComplexError):
        GroupAction(k, [bad])


def test_quotient_rotation_of_triangle():
    k = cycle_complex(3)
    rot = {0: 1, 1: 2, 2: 0}
    # the rotation acts freely on the circle; the quotient is again a circle
    assert homology(quotient(k, [rot])) == sphere_profile(1)


# -- character varieties -------------------------------------------------------------

def test_gl_1_is_square_circle():
    c = character_variety_complex("gl", 1)
    assert len(c.vertices) == 4 and len(c.facets) == 4 and c.dim() == 1
    assert homology(c) == sphere_profile(1)
    assert character_variety_homology("gl", 1) == sphere_profile(1)


def test_gl_2_sphere_profile():
    assert character_variety_homology("gl", 2) == sphere_profile(3)


def test_gl_2_complex_route_agrees():
    c = character_variety_complex("gl", 2)
    assert homology(c) == sphere_profile(3)


def test_sl_2_is_circle():
    assert character_variety_homology("sl", 2) == sphere_profile(1)
    c = character_variety_complex("sl", 2)
    assert homology(c) == sphere_profile(1)


def test_sl_3_sphere_profile():
    assert character_variety_homology("sl", 3) == sphere_profile(3)


def test_character_variety_range_check():
    with pytest.raises(ComplexError):
        character_variety_homology("gl", 4)
    with pytest.raises(ComplexError):
        character_variety_homology("sl", 1)


# -- sphere quotient map ------------------------------------------------------------

def unit_samples(rng, count, n):
    z = rng.normal(size=(count, n)) + 1j * rng.normal(size=(count, n))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def test_sphere_check_n1_bijection():
    rng = np.random.default_rng(1)
    rep = sphere_quotient_map_check(1, unit_samples(rng, 500, 1))
    assert rep["passed"]


def test_sphere_check_orbit_pair():
    z0 = (0.6 + 0.8j) / np.sqrt(2)
    pts = np.array([[z0, -z0], [-z0, z0]])
    rep = sphere_quotient_map_check(2, pts)
    assert rep["orbit_collapse_failures"] == 0
    assert rep["injectivity_failures"] == 0


def test_sphere_check_rejects_non_unit():
    with pytest.raises(ValueError):
        sphere_quotient_map_check(2, np.array([[1.0 + 0j, 1.0 + 0j]]))


def test_sphere_check_n3_small_sweep():
    rng = np.random.default_rng(3)
    rep = sphere_quotient_map_check(3, unit_samples(rng, 1500, 3))
    assert rep["passed"]


# -- tate strata -----------------------------------------------------------------------

def test_tate_positive_total_generic():
    assert tate_strata(2, (1, 1))["case"] == "generic"


def test_tate_zero_total_single_divisor():
    out = tate_strata(2, (1, -1))
    assert out["case"] == "single_divisor"
    assert out["local_model"] == "Gm^(n-1) x A1"


def test_tate_negative_total_case_table():
    out = tate_strata(2, (-1, -1))
    table = {(tuple(s["J"]), s["j"]): s for s in out["strata"]}
    assert table[((1, 2), 1)]["contained"] and table[((1, 2), 2)]["contained"]
    assert table[((1, 2), 1)]["divisor_coordinate"] == "x"  # |J| + |alpha| = 0
    assert not table[((1,), 1)]["contained"]  # |J| + |alpha| = -1
    assert not table[((2,), 2)]["contained"]


def test_tate_divisor_coordinate_split():
    out = tate_strata(3, (-2, 0, 0))
    table = {(tuple(s["J"]), s["j"]): s for s in out["strata"]}
    assert table[((1, 2), 1)]["contained"]
    assert table[((1, 2), 1)]["divisor_coordinate"] == "x"
    assert table[((1, 2, 3), 1)]["contained"]
    assert table[((1, 2, 3), 1)]["divisor_coordinate"] == "y"
    for entry in out["strata"]:
        if entry["contained"]:
            assert entry["codim_two_boundary"]


def test_tate_input_validation():
    with pytest.raises(ValueError):
        tate_strata(2, ())
    with pytest.raises(ValueError):
        tate_strata(1, (0,))
