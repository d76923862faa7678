"""Exact rational polyhedral geometry: cones, fans, dual cones, Hilbert bases.

All cones are rational and stored by primitive ray generators in canonical
(lexicographically sorted) order, so cone equality is tuple comparison.
Everything is integer/Fraction arithmetic; ambient ranks stay small (<= 8).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import (
    identity,
    int_kernel_basis,
    lattice_saturation_is_trivial,
    mat_mult,
    primitive,
    rat_rank,
    rat_solve,
    saturation_quotient_map,
    snf_with_transforms,
    transpose,
)

DIM_LIMIT = 8


class DimensionLimitError(ValueError):
    pass


class NotPointedError(ValueError):
    pass


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _check_rank(rank: int):
    if rank > DIM_LIMIT:
        raise DimensionLimitError(f"ambient rank {rank} exceeds desk-scale limit {DIM_LIMIT}")


def dual_rays(vectors, rank):
    """Generators of {m : <m, v> >= 0 for all v}, the cone dual to cone(vectors).

    The pointed part is enumerated by rank-(s-1) subsets of the input
    (s = dim span of the vectors); the lineality space (span of the
    vectors)^perp is appended as +- pairs of basis vectors.
    """
    _check_rank(rank)
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        basis = identity(rank)
        return [tuple(b) for b in basis] + [tuple(-x for x in b) for b in basis]

    # lineality of the dual = orthogonal complement of span(vectors)
    perp = int_kernel_basis([list(v) for v in vectors])
    out = []
    for b in perp:
        out.append(primitive(b))
        out.append(primitive([-x for x in b]))

    # pointed part, computed inside span(vectors)
    at = transpose([list(v) for v in vectors])  # rank x k
    u, d, _ = snf_with_transforms(at)
    s = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)
    if s == 0:
        return sorted(set(out))
    # rows of u are a unimodular change of coordinates; the first s rows
    # restrict to coordinates on span(vectors).
    vecs_s = [tuple(dot(u[i], v) for i in range(s)) for v in vectors]
    # enumerate candidate rays of the dual in the s-dim coordinates
    rays_s = set()
    if s == 1:
        ref = next(v for v in vecs_s if v != (0,))
        sign = 1 if ref[0] > 0 else -1
        if all(v[0] * sign >= 0 for v in vecs_s):
            rays_s.add((sign,))
    else:
        for subset in itertools.combinations(range(len(vecs_s)), s - 1):
            sub = [list(vecs_s[i]) for i in subset]
            if rat_rank(sub) != s - 1:
                continue
            ker = int_kernel_basis(sub)
            if len(ker) != 1:
                continue
            y = primitive(ker[0])
            pos = all(dot(y, v) >= 0 for v in vecs_s)
            neg = all(dot(y, v) <= 0 for v in vecs_s)
            if pos:
                rays_s.add(y)
            if neg:
                rays_s.add(tuple(-x for x in y))
    # lift y (functional on span coordinates) back to Z^rank: y . (first s
    # rows of u) is an integer functional extending y by 0 on the complement.
    for y in rays_s:
        lifted = tuple(sum(y[i] * u[i][j] for i in range(s)) for j in range(rank))
        out.append(primitive(lifted))
    return sorted(set(out))


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by primitive extreme-ray generators.

    Canonical form: rays primitive, deduplicated, lexicographically sorted.
    ``rays`` may contain +-v pairs when the cone has lineality (duals of
    non-full-dimensional cones); such cones are carried but most operations
    (Hilbert basis, fan membership) require pointedness.
    """

    rays: tuple
    rank: int

    @staticmethod
    def from_generators(generators, rank) -> "Cone":
        _check_rank(rank)
        gens = [primitive(g) for g in generators if any(g)]
        if not gens:
            return Cone(rays=(), rank=rank)
        # extreme rays via double dualization (canonical for pointed cones)
        halfspaces = dual_rays(gens, rank)
        rays = dual_rays(halfspaces, rank)
        return Cone(rays=tuple(sorted(set(rays))), rank=rank)

    def dim(self) -> int:
        if not self.rays:
            return 0
        return rat_rank([list(r) for r in self.rays])

    def facet_normals(self):
        """H-representation; includes +- pairs forcing span membership."""
        return dual_rays(self.rays, self.rank)

    def contains(self, vec) -> bool:
        return all(dot(m, vec) >= 0 for m in self.facet_normals())

    def is_pointed(self) -> bool:
        # pointed iff the dual cone is full-dimensional
        duals = self.facet_normals()
        if not duals:
            return self.rank == 0
        return rat_rank([list(m) for m in duals]) == self.rank

    def is_simplicial(self) -> bool:
        if not self.rays:
            return True
        return len(self.rays) == self.dim()

    def __repr__(self):
        return f"Cone{list(map(list, self.rays))}"


def dual_cone(c: Cone) -> Cone:
    """The cone of linear functionals nonnegative on ``c``."""
    _check_rank(c.rank)
    return Cone(rays=tuple(sorted(set(dual_rays(c.rays, c.rank)))), rank=c.rank)


def _simplicial_subcones(c: Cone):
    """Triangulate a pointed cone into simplicial subcones on its rays."""
    if c.is_simplicial():
        return [c.rays]
    d = c.dim()
    # placing triangulation: cone over triangulated facets from a fixed ray
    apex = c.rays[0]
    normals = c.facet_normals()
    pieces = []
    for m in normals:
        if dot(m, apex) == 0:
            continue
        face_rays = tuple(r for r in c.rays if dot(m, r) == 0)
        if not face_rays:
            continue
        face = Cone(rays=face_rays, rank=c.rank)
        if face.dim() != d - 1:
            continue
        for sub in _simplicial_subcones(face):
            pieces.append(tuple(sorted(set(sub) | {apex})))
    return pieces


def _parallelepiped_points(rays, rank):
    """Lattice points of {sum t_i r_i : 0 <= t_i < 1} for independent rays."""
    cols = transpose([list(r) for r in rays])
    lo = [sum(min(0, r[j]) for r in rays) for j in range(rank)]
    hi = [sum(max(0, r[j]) for r in rays) for j in range(rank)]
    pts = []
    for coords in itertools.product(*[range(lo[j], hi[j] + 1) for j in range(rank)]):
        t = rat_solve(cols, list(coords))
        if t is None:
            continue
        # membership in span and half-open box
        if all(0 <= ti < 1 for ti in t):
            residual = [coords[j] - sum(Fraction(rays[i][j]) * t[i] for i in range(len(rays))) for j in range(rank)]
            if all(x == 0 for x in residual):
                pts.append(tuple(coords))
    return pts


def hilbert_basis(c: Cone):
    """Unique minimal generating set of the monoid of lattice points of ``c``.

    Bounded enumeration: candidates are the primitive rays plus the lattice
    points of the fundamental parallelepipeds of a triangulation; reduction
    removes every element that splits as a sum of two nonzero monoid points.
    """
    if not c.is_pointed():
        raise NotPointedError("Hilbert basis requires a pointed cone (units present)")
    if not c.rays:
        return []
    candidates = set(c.rays)
    for sub in _simplicial_subcones(c):
        for p in _parallelepiped_points(sub, c.rank):
            if any(p):
                candidates.add(p)
    normals = c.facet_normals()
    grading = [sum(m[j] for m in normals) for j in range(c.rank)]

    def inside(v):
        return all(dot(m, v) >= 0 for m in normals)

    ordered = sorted(candidates, key=lambda v: (dot(grading, v), v))
    basis = []
    for x in ordered:
        reducible = False
        for y in basis:
            diff = tuple(a - b for a, b in zip(x, y))
            if any(diff) and inside(diff):
                reducible = True
                break
            if not any(diff):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return sorted(basis)


class FanError(ValueError):
    pass


class Fan:
    """Finite fan: shared primitive ray pool plus cones as ray-index sets.

    Cones are pointed, so the extreme-ray index set determines the cone.
    The zero cone (empty index set) is always present.  The face relation
    is computed on demand.
    """

    def __init__(self, rank: int, rays=None, cones=None, validate: bool = True):
        _check_rank(rank)
        self.rank = rank
        self.rays = [tuple(r) for r in (rays or [])]
        self._ray_index = {r: i for i, r in enumerate(self.rays)}
        cone_set = {frozenset(c) for c in (cones or [])}
        cone_set.add(frozenset())
        self.cones = sorted(cone_set, key=lambda s: (len(s), sorted(s)))
        self._cone_cache = {}
        if validate:
            self._close_under_faces()

    # -- construction -------------------------------------------------

    @staticmethod
    def from_cones(cones, rank, validate_pairs: bool = False) -> "Fan":
        fan = Fan(rank, [], [], validate=False)
        for c in cones:
            fan._add_cone_with_faces(c)
        fan.cones = sorted({frozenset(s) for s in fan.cones} | {frozenset()},
                           key=lambda s: (len(s), sorted(s)))
        if validate_pairs:
            fan.validate()
        return fan

    def _ray_id(self, ray):
        ray = primitive(ray)
        if ray not in self._ray_index:
            self._ray_index[ray] = len(self.rays)
            self.rays.append(ray)
        return self._ray_index[ray]

    def _add_cone_with_faces(self, c: Cone):
        if not c.is_pointed():
            raise FanError(f"fan cones must be pointed: {c}")
        for face in cone_faces(c):
            idx = frozenset(self._ray_id(r) for r in face.rays)
            self.cones.append(idx)

    def _close_under_faces(self):
        closed = set()
        for idx in self.cones:
            c = self.cone_geometry(idx)
            if set(c.rays) != {self.rays[i] for i in idx}:
                raise FanError(f"generators {sorted(idx)} are not the extreme rays of their cone")
            for face in cone_faces(c):
                closed.add(frozenset(self._ray_index[r] for r in face.rays))
        self.cones = sorted(closed | set(self.cones), key=lambda s: (len(s), sorted(s)))

    # -- geometry ------------------------------------------------------

    def cone_geometry(self, idx) -> Cone:
        idx = frozenset(idx)
        if idx not in self._cone_cache:
            self._cone_cache[idx] = Cone.from_generators([self.rays[i] for i in idx], self.rank)
        return self._cone_cache[idx]

    def dim(self) -> int:
        return max((self.cone_geometry(c).dim() for c in self.cones), default=0)

    def maximal_cones(self):
        return [c for c in self.cones if not any(c < d for d in self.cones)]

    def face_relation(self):
        """Pairs (i, j) with cone i a proper-or-equal face of cone j."""
        pairs = []
        for i, ci in enumerate(self.cones):
            for j, cj in enumerate(self.cones):
                if ci <= cj and self._is_face(ci, cj):
                    pairs.append((i, j))
        return pairs

    def _is_face(self, small, big) -> bool:
        if not small <= big:
            return False
        if small == big:
            return True
        cb = self.cone_geometry(big)
        rays_small = [self.rays[i] for i in small]
        active = [m for m in cb.facet_normals() if all(dot(m, r) == 0 for r in rays_small)]
        face_rays = {r for r in cb.rays if all(dot(m, r) == 0 for m in active)}
        return face_rays == set(rays_small)

    def validate(self):
        """Check the fan axioms pairwise (quadratic; for small fans)."""
        for a, b in itertools.combinations(self.cones, 2):
            ca, cb = self.cone_geometry(a), self.cone_geometry(b)
            normals = list(ca.facet_normals()) + list(cb.facet_normals())
            meet_rays = dual_rays(normals, self.rank)
            meet = Cone.from_generators([r for r in meet_rays], self.rank)
            idx = frozenset(self._ray_index.get(r, -1) for r in meet.rays)
            if -1 in idx or idx not in set(map(frozenset, self.cones)):
                raise FanError(f"intersection of {sorted(a)} and {sorted(b)} is not a common face")
            if not (self._is_face(idx, a) and self._is_face(idx, b)):
                raise FanError(f"intersection of {sorted(a)} and {sorted(b)} is not a common face")

    def support_contains(self, vec) -> bool:
        return any(self.cone_geometry(c).contains(vec) for c in self.maximal_cones())

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        order = sorted(range(len(self.rays)), key=lambda i: self.rays[i])
        renum = {old: new for new, old in enumerate(order)}
        return {
            "schema": "1",
            "rank": self.rank,
            "rays": [list(self.rays[i]) for i in order],
            "cones": sorted([sorted(renum[i] for i in c) for c in self.cones],
                            key=lambda c: (len(c), c)),
        }

    @staticmethod
    def from_json_dict(doc) -> "Fan":
        rays = [tuple(int(x) for x in r) for r in doc["rays"]]
        return Fan(int(doc["rank"]), rays, [frozenset(c) for c in doc["cones"]])

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=1)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.to_json_dict() == other.to_json_dict()

    def __repr__(self):
        return f"Fan(rank={self.rank}, rays={len(self.rays)}, cones={len(self.cones)})"


@lru_cache(maxsize=None)
def _cone_faces_cached(rays, rank):
    c = Cone(rays=rays, rank=rank)
    normals = c.facet_normals()
    faces = set()
    for k in range(len(normals) + 1):
        for subset in itertools.combinations(normals, k):
            face_rays = tuple(sorted(r for r in c.rays if all(dot(m, r) == 0 for m in subset)))
            faces.add(face_rays)
    return tuple(Cone(rays=f, rank=rank) for f in sorted(faces, key=lambda f: (len(f), f)))


def cone_faces(c: Cone):
    """All faces of a pointed cone (including 0 and the cone itself)."""
    return list(_cone_faces_cached(c.rays, c.rank))


def star_fan(fan: Fan, sigma) -> Fan:
    """Fan in N / <sigma> whose cones are images of the cones containing sigma."""
    sigma = frozenset(sigma)
    if sigma not in set(map(frozenset, fan.cones)):
        raise FanError("sigma is not a cone of the fan")
    span_rays = [list(fan.rays[i]) for i in sigma]
    proj = saturation_quotient_map(span_rays, fan.rank)
    new_rank = len(proj)
    cones = []
    for tau in fan.cones:
        if not sigma <= frozenset(tau):
            continue
        imgs = [tuple(dot(row, fan.rays[i]) for row in proj) for i in tau]
        cones.append(Cone.from_generators(imgs, new_rank))
    return Fan.from_cones(cones, new_rank)


def compactified_fan_strata(fan: Fan):
    """One stratum per cone: (sigma, star fan of sigma in the quotient lattice).

    The zero-cone stratum is the fan itself; deeper cones give the boundary
    strata of the compactified fan.
    """
    return [(fan.cone_geometry(sigma), star_fan(fan, sigma)) for sigma in fan.cones]


def intersect_fan_subspace(fan: Fan, basis) -> Fan:
    """Fan {tau meet V} on the subspace V spanned by a saturated lattice basis.

    Result cones are expressed in the basis coordinates: a point c stands
    for sum_i c_i b_i in the ambient lattice.
    """
    basis = [tuple(b) for b in basis]
    if rat_rank([list(b) for b in basis]) != len(basis):
        raise FanError("subspace basis is not linearly independent")
    if not lattice_saturation_is_trivial(basis, fan.rank):
        raise FanError("subspace lattice is not saturated; coordinates would be fractional")
    k = len(basis)
    cones = []
    seen = set()
    for tau in fan.maximal_cones():
        geom = fan.cone_geometry(tau)
        normals = geom.facet_normals()
        restricted = [tuple(dot(m, b) for b in basis) for m in normals]
        rays = dual_rays(restricted, k)
        c = Cone.from_generators(rays, k)
        key = c.rays
        if key not in seen:
            seen.add(key)
            cones.append(c)
    return Fan.from_cones(cones, k)


# -- standard fans used by fixtures and tests ---------------------------

def fan_p2() -> Fan:
    rays = [(1, 0), (0, 1), (-1, -1)]
    return Fan(2, rays, [frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})])


def fan_p1() -> Fan:
    return Fan(1, [(1,), (-1,)], [frozenset({0}), frozenset({1})])


def fan_p1xp1() -> Fan:
    rays = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    quads = [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}), frozenset({0, 3})]
    return Fan(2, rays, quads)


def fan_a2() -> Fan:
    return Fan(2, [(1, 0), (0, 1)], [frozenset({0, 1})])


def product_fan(f1: Fan, f2: Fan) -> Fan:
    """Product fan in the direct-sum lattice; cones are products of cones."""
    rank = f1.rank + f2.rank
    rays = [r + (0,) * f2.rank for r in f1.rays] + [(0,) * f1.rank + r for r in f2.rays]
    shift = len(f1.rays)
    cones = []
    for c1 in f1.cones:
        for c2 in f2.cones:
            cones.append(frozenset(c1) | frozenset(i + shift for i in c2))
    return Fan(rank, rays, cones, validate=False)
