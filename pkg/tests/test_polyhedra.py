import itertools
import random

import pytest

from logskel.complexes import homology, link_complex, sphere_profile
from logskel.lattice import rat_rank
from logskel.polyhedra import (
    Cone,
    DimensionLimitError,
    Fan,
    NotPointedError,
    compactified_fan_strata,
    dual_cone,
    dot,
    fan_a2,
    fan_p1,
    fan_p1xp1,
    fan_p2,
    hilbert_basis,
    intersect_fan_subspace,
    product_fan,
    star_fan,
)


# -- dual cone -------------------------------------------------------------

def brute_force_dual(generators, rank, box=4):
    """Oracle: primitive vectors in a box nonnegative on the generators,
    reduced to extreme rays."""
    from logskel.lattice import primitive

    kept = set()
    for v in itertools.product(range(-box, box + 1), repeat=rank):
        if not any(v):
            continue
        if all(dot(v, g) >= 0 for g in generators):
            kept.add(primitive(v))
    return Cone.from_generators(sorted(kept), rank)


def test_dual_first_quadrant_self_dual():
    c = Cone.from_generators([(1, 0), (0, 1)], 2)
    assert dual_cone(c) == c


def test_dual_slanted_cone_against_brute_force():
    c = Cone.from_generators([(1, 0), (1, 2)], 2)
    assert dual_cone(c).rays == ((0, 1), (2, -1))
    assert dual_cone(c) == brute_force_dual(c.rays, 2)


def test_dual_of_ray_is_half_space():
    c = Cone.from_generators([(1, 0)], 2)
    assert dual_cone(c).rays == ((0, -1), (0, 1), (1, 0))


def test_dual_dual_identity_on_random_pointed_cones():
    rng = random.Random(3)
    for _ in range(100):
        rank = rng.choice([2, 3])
        gens = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(rank + 1)]
        c = Cone.from_generators(gens, rank)
        if c.dim() != rank or not c.is_pointed():
            continue
        assert dual_cone(dual_cone(c)) == c


def test_dual_random_cones_against_brute_force():
    rng = random.Random(9)
    for _ in range(40):
        gens = [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(2)]
        c = Cone.from_generators(gens, 2)
        if not c.is_pointed() or not c.rays:
            continue
        assert dual_cone(c) == brute_force_dual(c.rays, 2)


def test_rank_limit():
    with pytest.raises(DimensionLimitError):
        Cone.from_generators([tuple([1] + [0] * 8)], 9)


# -- hilbert basis -----------------------------------------------------------

def zonotope_hilbert_oracle(c: Cone):
    """Oracle for a simplicial full-rank cone: lattice points of the
    generator zonotope (exact membership test), decomposables removed."""
    from fractions import Fraction

    from logskel.lattice import rat_solve

    rank = c.rank
    gens = c.rays
    assert len(gens) == rank
    cols = [[g[j] for g in gens] for j in range(rank)]  # rank x rank, x = G t
    lo = [sum(min(0, g[j]) for g in gens) for j in range(rank)]
    hi = [sum(max(0, g[j]) for g in gens) for j in range(rank)]
    pts = set()
    for v in itertools.product(*[range(lo[j], hi[j] + 1) for j in range(rank)]):
        if not any(v):
            continue
        t = rat_solve(cols, list(v))
        if t is not None and all(Fraction(0) <= ti <= 1 for ti in t):
            pts.add(v)
    normals = c.facet_normals()

    def in_monoid(x):
        return all(dot(m, x) >= 0 for m in normals)

    basis = []
    for x in sorted(pts):
        decomposable = False
        for y in sorted(pts):
            z = tuple(a - b for a, b in zip(x, y))
            if any(y) and any(z) and in_monoid(z):
                decomposable = True
                break
        if not decomposable:
            basis.append(x)
    return sorted(basis)


def brute_force_irreducible(c: Cone, element, bound=8):
    """No decomposition element = y + z with nonzero monoid points y, z."""
    normals = c.facet_normals()

    def inside(v):
        return all(dot(m, v) >= 0 for m in normals)

    rank = c.rank
    rng = [range(-bound, bound + 1)] * rank
    for y in itertools.product(*rng):
        if not any(y) or not inside(y):
            continue
        z = tuple(a - b for a, b in zip(element, y))
        if any(z) and inside(z):
            return False
    return True


def test_hilbert_free_quadrant():
    c = Cone.from_generators([(1, 0), (0, 1)], 2)
    assert hilbert_basis(c) == [(0, 1), (1, 0)]


def test_hilbert_slanted():
    c = Cone.from_generators([(0, 1), (2, -1)], 2)
    assert hilbert_basis(c) == [(0, 1), (1, 0), (2, -1)]


def test_hilbert_single_ray_primitive():
    c = Cone.from_generators([(2, 4)], 2)
    assert hilbert_basis(c) == [(1, 2)]


def test_hilbert_requires_pointed():
    c = Cone.from_generators([(1, 0), (-1, 0)], 2)
    with pytest.raises(NotPointedError):
        hilbert_basis(c)


def test_hilbert_irreducibility_random_sweep():
    rng = random.Random(23)
    done = 0
    while done < 200:
        rank = rng.choice([2, 2, 3])
        gens = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(rank)]
        c = Cone.from_generators(gens, rank)
        if not c.rays or not c.is_pointed():
            continue
        basis = hilbert_basis(c)
        for el in basis:
            assert brute_force_irreducible(c, el, bound=6)
        # every ray's primitive generator appears
        for r in c.rays:
            assert r in basis
        done += 1


def test_hilbert_matches_zonotope_oracle_small():
    for gens in ([(1, 0), (1, 3)], [(1, 1), (2, -1)], [(0, 1), (3, -1)]):
        c = Cone.from_generators(gens, 2)
        assert hilbert_basis(c) == zonotope_hilbert_oracle(c)


# -- fans --------------------------------------------------------------------

def test_p2_compactified_strata():
    strata = compactified_fan_strata(fan_p2())
    assert len(strata) == 7
    dims = sorted((s.dim() for _, s in strata), reverse=True)
    assert dims == [2, 1, 1, 1, 0, 0, 0]


def test_zero_fan_single_stratum():
    f = Fan(2, [], [])
    strata = compactified_fan_strata(f)
    assert len(strata) == 1
    assert strata[0][1] == f


def test_p1_three_strata():
    strata = compactified_fan_strata(fan_p1())
    assert len(strata) == 3
    assert sorted((s.dim() for _, s in strata), reverse=True) == [1, 0, 0]


def test_strata_cone_count_matches_double_loop():
    for fan in (fan_p2(), fan_p1xp1(), fan_a2()):
        total = sum(len(star.cones) for _, star in compactified_fan_strata(fan))
        pairs = 0
        cone_sets = [frozenset(c) for c in fan.cones]
        for sigma in cone_sets:
            for tau in cone_sets:
                if sigma <= tau and fan._is_face(sigma, tau):
                    pairs += 1
        assert total == pairs


def test_star_fan_of_ray_is_p1():
    star = star_fan(fan_p2(), [0])
    assert star.rank == 1
    assert sorted(star.rays) == [(-1,), (1,)]
    assert len(star.cones) == 3


def test_star_fan_identity_and_dims():
    f = fan_p2()
    assert star_fan(f, []) == f
    for sigma in f.cones:
        star = star_fan(f, sigma)
        assert star.dim() == f.dim() - f.cone_geometry(sigma).dim()


def test_star_fan_of_maximal_cone_is_zero_fan():
    star = star_fan(fan_p2(), [0, 1])
    assert star.rank == 0
    assert star.cones == [frozenset()]


def test_star_membership_error():
    with pytest.raises(Exception):
        star_fan(fan_p2(), [0, 1, 2])


def test_intersect_p1xp1_with_antidiagonal():
    out = intersect_fan_subspace(fan_p1xp1(), [(1, -1)])
    assert out.rank == 1
    assert sorted(out.rays) == [(-1,), (1,)]


def test_intersect_whole_space_identity():
    f = fan_p2()
    assert intersect_fan_subspace(f, [(1, 0), (0, 1)]) == f


def test_intersect_p2_squared_kernel_link_is_circle():
    pp = product_fan(fan_p2(), fan_p2())
    out = intersect_fan_subspace(pp, [(1, 0, -1, 0), (0, 1, 0, -1)])
    assert out.rank == 2
    assert homology(link_complex(out)) == sphere_profile(1)
    out.validate()  # fan axioms hold post hoc


def test_intersect_rejects_non_saturated():
    with pytest.raises(Exception):
        intersect_fan_subspace(fan_p1xp1(), [(2, 0)])


def test_fan_json_roundtrip_and_sorted_emission():
    f = fan_p2()
    doc = f.to_json_dict()
    assert doc["rays"] == sorted(doc["rays"])
    assert Fan.from_json_dict(doc) == f
