"""Simplicial complexes, group quotients, integral homology, sphere pipelines.

The group quotient is the delicate part.  Identifying vertex orbits in a raw
complex can collapse distinct cells of the orbit space (an antipodal action
on a 4-cycle would yield a segment instead of a circle), so ``quotient``
works on the barycentric subdivision: the size order of a chain of faces is
group-invariant, which turns the subdivided complex into a simplicial set on
which any simplicial action may be quotiented levelwise, and geometric
realization commutes with that quotient.  Cell orbits then form a regular CW
complex whose order complex is an honest triangulation of the orbit space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .lattice import (
    SparseIntMatrix,
    is_unimodular,
    mat_mult,
    rat_solve,
    snf_with_transforms,
    transpose,
)
from .polyhedra import (
    Cone,
    Fan,
    dot,
    fan_p1xp1,
    intersect_fan_subspace,
    primitive,
    product_fan,
)


class ComplexError(ValueError):
    pass


class SimplicialComplex:
    """Abstract simplicial complex: hashable vertex labels plus facets."""

    def __init__(self, vertices, facets):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if not f <= vset:
                raise ComplexError(f"facet {sorted(f, key=str)} uses undeclared vertices")
        self.facets = tuple(sorted((f for f in fs if not any(f < g for g in fs)),
                                   key=lambda f: (len(f), sorted(map(str, f)))))
        covered = set().union(*self.facets) if self.facets else set()
        if covered != vset:
            raise ComplexError("every declared vertex must appear in some facet")

    @staticmethod
    def from_facets(facets) -> "SimplicialComplex":
        facets = [frozenset(f) for f in facets]
        verts = sorted(set().union(*facets) if facets else [], key=str)
        return SimplicialComplex(verts, facets)

    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def simplices_by_dim(self):
        """List of sorted simplex tuples per dimension (0..dim)."""
        by_dim = [set() for _ in range(self.dim() + 1)]
        for f in self.facets:
            fl = sorted(f, key=str)
            n = len(fl)
            for k in range(1, n + 1):
                for sub in itertools.combinations(fl, k):
                    by_dim[k - 1].add(sub)
        return [sorted(s, key=lambda t: tuple(map(str, t))) for s in by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(s) for d, s in enumerate(self.simplices_by_dim()))

    def f_vector(self):
        return [len(s) for s in self.simplices_by_dim()]

    def relabeled(self, prefix) -> "SimplicialComplex":
        return SimplicialComplex([(prefix, v) for v in self.vertices],
                                 [frozenset((prefix, v) for v in f) for f in self.facets])

    def to_json_dict(self):
        labels = [_label_json(v) for v in self.vertices]
        index = {v: i for i, v in enumerate(self.vertices)}
        return {
            "schema": "1",
            "vertices": labels,
            "facets": sorted([sorted(index[v] for v in f) for f in self.facets],
                             key=lambda f: (len(f), f)),
        }

    @staticmethod
    def from_json_dict(doc) -> "SimplicialComplex":
        verts = [_label_unjson(v) for v in doc["vertices"]]
        return SimplicialComplex(verts, [frozenset(verts[i] for i in f) for f in doc["facets"]])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and set(self.facets) == set(other.facets)

    def __repr__(self):
        return f"SimplicialComplex(v={len(self.vertices)}, facets={len(self.facets)}, dim={self.dim()})"


def _label_json(v):
    if isinstance(v, tuple):
        return list(_label_json(x) for x in v)
    if isinstance(v, frozenset):
        return sorted(_label_json(x) for x in v)
    return v


def _label_unjson(v):
    if isinstance(v, list):
        return tuple(_label_unjson(x) for x in v)
    return v


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle graph as a triangulated circle (n >= 3)."""
    if n < 3:
        raise ComplexError("a triangulated circle needs at least 3 vertices")
    return SimplicialComplex.from_facets([(i, (i + 1) % n) for i in range(n)])


def simplex_boundary_complex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    verts = list(range(n + 1))
    return SimplicialComplex.from_facets(itertools.combinations(verts, n))


class GroupAction:
    """Finite permutation group on the vertices of a complex, by generators."""

    def __init__(self, complex_: SimplicialComplex, generators, max_order: int = 20000):
        self.complex = complex_
        verts = set(complex_.vertices)
        gens = []
        for g in generators:
            g = dict(g)
            if set(g) != verts or set(g.values()) != verts:
                raise ComplexError("generator is not a permutation of the vertex set")
            gens.append(g)
        facets = set(complex_.facets)
        for g in gens:
            for f in facets:
                if frozenset(g[v] for v in f) not in facets:
                    raise ComplexError("generator does not map facets to facets (non-simplicial action)")
        self.elements = self._closure(gens, verts, max_order)

    @staticmethod
    def _closure(gens, verts, max_order):
        ident = {v: v for v in verts}
        seen = {_perm_key(ident): ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    comp = {v: g[p[v]] for v in p}
                    k = _perm_key(comp)
                    if k not in seen:
                        seen[k] = comp
                        nxt.append(comp)
                        if len(seen) > max_order:
                            raise ComplexError("group closure exceeds the desk-scale bound")
            frontier = nxt
        return list(seen.values())

    def order(self) -> int:
        return len(self.elements)


def _perm_key(p):
    return tuple(sorted(p.items(), key=lambda kv: str(kv[0])))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join: facets are unions of one facet from each side (labels made disjoint)."""
    if set(a.vertices) & set(b.vertices):
        a = a.relabeled(0)
        b = b.relabeled(1)
    facets = [fa | fb for fa in a.facets for fb in b.facets]
    return SimplicialComplex(tuple(a.vertices) + tuple(b.vertices), facets)


def join_all(complexes) -> SimplicialComplex:
    """n-fold join with factor-indexed labels (i, v)."""
    out = None
    for i, c in enumerate(complexes):
        part = c.relabeled(i)
        out = part if out is None else SimplicialComplex(
            out.vertices + part.vertices, [p | q for p in out.facets for q in part.facets])
    if out is None:
        raise ComplexError("empty join")
    return out


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertices are the simplices of ``k``."""
    facets = []
    for f in k.facets:
        fl = sorted(f, key=str)
        for perm in itertools.permutations(fl):
            chain = tuple(tuple(sorted(perm[: i + 1], key=str)) for i in range(len(perm)))
            facets.append(frozenset(chain))
    return SimplicialComplex.from_facets(facets)


# --------------------------------------------------------------------------
# Orbit machinery.  ``_OrbitCells`` is the levelwise quotient of the
# subdivided complex viewed as a simplicial set: cells in dimension d are
# orbits of (d+1)-chains of faces; the i-th face of a chain drops its i-th
# element, and the size order makes the boundary signs canonical.
# --------------------------------------------------------------------------

class _OrbitCells:
    def __init__(self, base: SimplicialComplex, action: GroupAction):
        self.base = base
        self.action = action
        simplices = base.simplices_by_dim()
        self.ids = {}
        self.sims = []
        for dim_list in simplices:
            for s in dim_list:
                self.ids[s] = len(self.sims)
                self.sims.append(s)
        # vertex permutations as simplex-id permutations
        self.perms = []
        for g in action.elements:
            arr = [0] * len(self.sims)
            for s, i in self.ids.items():
                arr[i] = self.ids[tuple(sorted((g[v] for v in s), key=str))]
            self.perms.append(arr)
        # chains by dimension
        self.dim = base.dim()
        self.chains = [[] for _ in range(self.dim + 1)]
        self.chain_ids = [dict() for _ in range(self.dim + 1)]
        self._enumerate_chains(simplices)
        self.reps = [self._orbits(d) for d in range(self.dim + 1)]

    def _enumerate_chains(self, simplices):
        # proper-face id lists per simplex
        faces_of = [[] for _ in self.sims]
        for s, i in self.ids.items():
            sl = list(s)
            n = len(sl)
            for kk in range(1, n):
                for sub in itertools.combinations(sl, kk):
                    faces_of[i].append(self.ids[tuple(sorted(sub, key=str))])
        ending = [[] for _ in self.sims]  # chains with top element s, as tuples
        order = sorted(range(len(self.sims)), key=lambda i: len(self.sims[i]))
        for i in order:
            mine = [(i,)]
            for f in faces_of[i]:
                for c in ending[f]:
                    mine.append(c + (i,))
            ending[i] = mine
        for chains in ending:
            for c in chains:
                d = len(c) - 1
                self.chain_ids[d][c] = len(self.chains[d])
                self.chains[d].append(c)

    def _orbits(self, d):
        """Canonical representative index per chain, plus the list of reps."""
        chains = self.chains[d]
        ids = self.chain_ids[d]
        rep_of = [-1] * len(chains)
        reps = []
        for i, c in enumerate(chains):
            if rep_of[i] >= 0:
                continue
            orbit = {i}
            for arr in self.perms:
                img = tuple(arr[x] for x in c)
                orbit.add(ids[img])
            r = len(reps)
            reps.append(min(orbit))
            for j in orbit:
                rep_of[j] = r
        return rep_of, reps

    def cell_counts(self):
        return [len(reps) for _, reps in self.reps]

    def boundary_columns(self, d):
        """Boundary matrix of the orbit cell complex in dimension d."""
        rep_of_d, reps_d = self.reps[d]
        cols = []
        if d == 0:
            return [[] for _ in reps_d]
        rep_of_low, _ = self.reps[d - 1]
        low_ids = self.chain_ids[d - 1]
        for r in reps_d:
            chain = self.chains[d][r]
            col = {}
            for i in range(len(chain)):
                face = chain[:i] + chain[i + 1:]
                row = rep_of_low[low_ids[face]]
                col[row] = col.get(row, 0) + (-1) ** i
            cols.append([(row, val) for row, val in col.items() if val])
        return cols

    def orbit_space_complex(self, max_facets: int = 2_000_000) -> SimplicialComplex:
        """Order complex of the orbit cell poset: triangulates the orbit space.

        The orbit cells form a regular CW complex (faces of a chain lie in
        pairwise distinct orbits), so its barycentric subdivision is a
        genuine simplicial complex homeomorphic to the orbit space.
        """
        # face poset: orbit [c'] <= [c] iff some subchain of (a representative
        # of) [c] lies in [c']; flags through top cells give the facets.
        est = sum(len(reps) * _factorial(d + 1)
                  for d, (_, reps) in enumerate(self.reps) if d == self.dim)
        if est > max_facets:
            raise ComplexError(
                f"orbit-space triangulation would need ~{est} facets (> {max_facets})")
        facets = []
        for d in range(self.dim + 1):
            rep_of_d, reps_d = self.reps[d]
            maximal = self._maximal_mask(d)
            for ridx, r in enumerate(reps_d):
                if not maximal[ridx]:
                    continue
                chain = self.chains[d][r]
                for flag in self._flags(chain):
                    facets.append(frozenset(flag))
        return SimplicialComplex.from_facets(facets)

    def _maximal_mask(self, d):
        rep_of_d, reps_d = self.reps[d]
        mask = [True] * len(reps_d)
        if d == self.dim:
            return mask
        rep_set = set()
        up_rep_of, up_reps = self.reps[d + 1]
        for r in up_reps:
            chain = self.chains[d + 1][r]
            for i in range(len(chain)):
                face = chain[:i] + chain[i + 1:]
                rep_set.add(self.reps[d][0][self.chain_ids[d][face]])
        for ridx in range(len(reps_d)):
            if ridx in rep_set:
                mask[ridx] = False
        return mask

    def _flags(self, chain):
        """All maximal flags of subchains of ``chain``, as orbit-label tuples."""
        n = len(chain)
        labels = {}

        def lab(sub):
            if sub not in labels:
                d = len(sub) - 1
                labels[sub] = ("cell", d, self.reps[d][0][self.chain_ids[d][sub]])
            return labels[sub]

        out = []
        for perm in itertools.permutations(range(n)):
            prefix = []
            flag = []
            for i in perm:
                prefix.append(i)
                sub = tuple(chain[j] for j in sorted(prefix))
                flag.append(lab(sub))
            out.append(tuple(flag))
        return out


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def quotient(k: SimplicialComplex, action_generators, max_facets: int = 2_000_000) -> SimplicialComplex:
    """Quotient of a complex by a finite simplicial group action.

    Subdivides once (making the action rigid on the chain model), forms the
    orbit cell complex, and returns its order complex, which triangulates
    the orbit space.  The trivial group returns the complex unchanged.
    """
    action = action_generators if isinstance(action_generators, GroupAction) \
        else GroupAction(k, action_generators)
    if action.order() == 1:
        return k
    cells = _OrbitCells(k, action)
    return cells.orbit_space_complex(max_facets=max_facets)


def quotient_homology(k: SimplicialComplex, action_generators) -> "HomologyProfile":
    """Integral homology of the orbit space, computed on orbit cells directly."""
    action = action_generators if isinstance(action_generators, GroupAction) \
        else GroupAction(k, action_generators)
    if action.order() == 1:
        return homology(k)
    cells = _OrbitCells(k, action)
    counts = cells.cell_counts()
    columns = [cells.boundary_columns(d) for d in range(len(counts))]
    return _homology_from_boundaries(counts, columns)


@dataclass
class HomologyProfile:
    """Per-degree free rank and torsion orders (sorted divisibility chain)."""

    degrees: list = field(default_factory=list)  # list of (rank, [torsion orders])

    def rank(self, d: int) -> int:
        return self.degrees[d][0] if 0 <= d < len(self.degrees) else 0

    def torsion(self, d: int):
        return self.degrees[d][1] if 0 <= d < len(self.degrees) else []

    def is_sphere(self, n: int) -> bool:
        """Profile of S^n: free rank 1 in degrees 0 and n, nothing else."""
        if any(t for _, t in self.degrees):
            return False
        want = {0: 1, n: 1} if n > 0 else {0: 2}
        for d, (r, _) in enumerate(self.degrees):
            if r != want.get(d, 0):
                return False
        return all(self.rank(d) == want[d] for d in want)

    def to_json_dict(self):
        return {"degree": [{"rank": r, "torsion": list(t)} for r, t in self.degrees]}

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        a = [(r, list(t)) for r, t in self.degrees]
        b = [(r, list(t)) for r, t in other.degrees]
        while a and a[-1] == (0, []):
            a.pop()
        while b and b[-1] == (0, []):
            b.pop()
        return a == b

    def __repr__(self):
        parts = []
        for r, t in self.degrees:
            s = f"Z^{r}" if r else "0"
            if t:
                s += "+" + "+".join(f"Z/{x}" for x in t)
            parts.append(s)
        return "H(" + ", ".join(parts) + ")"


def sphere_profile(n: int) -> HomologyProfile:
    degrees = [(0, []) for _ in range(n + 1)]
    if n == 0:
        degrees[0] = (2, [])
    else:
        degrees[0] = (1, [])
        degrees[n] = (1, [])
    return HomologyProfile(degrees)


def _homology_from_boundaries(counts, columns):
    """Homology of a chain complex given per-dim cell counts and boundaries."""
    dims = len(counts)
    diag = []
    for d in range(dims):
        mat = SparseIntMatrix(columns[d], counts[d - 1] if d > 0 else 0)
        diag.append(mat.diagonal_snf() if d > 0 else [])
    ranks = [len(dg) for dg in diag]  # rank of boundary_d
    degrees = []
    for d in range(dims):
        rank_d = ranks[d]
        rank_up = ranks[d + 1] if d + 1 < dims else 0
        free = counts[d] - rank_d - rank_up
        torsion = sorted(x for x in (diag[d + 1] if d + 1 < dims else []) if x > 1)
        degrees.append((free, torsion))
    return HomologyProfile(degrees)


def homology(k: SimplicialComplex) -> HomologyProfile:
    """Simplicial homology with integer coefficients via Smith normal form."""
    simplices = k.simplices_by_dim()
    ids = [{s: i for i, s in enumerate(level)} for level in simplices]
    counts = [len(level) for level in simplices]
    columns = [[] for _ in range(len(counts))]
    for d in range(1, len(counts)):
        cols = []
        for s in simplices[d]:
            col = []
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                col.append((ids[d - 1][face], (-1) ** i))
            cols.append(col)
        columns[d] = cols
    if not counts:
        return HomologyProfile([])
    return _homology_from_boundaries(counts, columns)


def snf_self_check(matrix) -> bool:
    """U A V = D with unimodular U, V and a divisibility chain on the diagonal."""
    u, d, v = snf_with_transforms(matrix)
    if not (is_unimodular(u) and is_unimodular(v)):
        return False
    prod = mat_mult(mat_mult(u, [list(map(int, row)) for row in matrix]), v)
    if prod != d:
        return False
    diag = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0 and (diag[i] == 0 or diag[i + 1] % diag[i] != 0):
            return False
        if diag[i] == 0 and diag[i + 1] != 0:
            return False
    return all(x >= 0 for x in diag)


# --------------------------------------------------------------------------
# Fans -> complexes
# --------------------------------------------------------------------------

def stellar_subdivide_until_simplicial(fan: Fan) -> Fan:
    """Insert barycentric rays into non-simplicial cones until all are simplicial."""
    while True:
        bad = None
        for c in fan.maximal_cones():
            if not fan.cone_geometry(c).is_simplicial():
                bad = c
                break
        if bad is None:
            return fan
        geom = fan.cone_geometry(bad)
        new_ray = primitive([sum(r[j] for r in geom.rays) for j in range(fan.rank)])
        cones = []
        for c in fan.maximal_cones():
            cg = fan.cone_geometry(c)
            if c != bad:
                cones.append(cg)
                continue
            for m in cg.facet_normals():
                if dot(m, new_ray) == 0:
                    continue
                face_rays = [r for r in cg.rays if dot(m, r) == 0]
                if face_rays:
                    cones.append(Cone.from_generators(face_rays + [list(new_ray)], fan.rank))
        fan = Fan.from_cones(cones, fan.rank)


def link_complex(fan: Fan) -> SimplicialComplex:
    """Link of a fan: vertices are rays, simplices are (simplicial) cones."""
    fan = stellar_subdivide_until_simplicial(fan)
    facets = []
    for c in fan.maximal_cones():
        if c:
            facets.append(frozenset(fan.rays[i] for i in c))
    if not facets:
        raise ComplexError("link of the zero fan is empty")
    return SimplicialComplex.from_facets(facets)


# --------------------------------------------------------------------------
# Character-variety pipelines
# --------------------------------------------------------------------------

def _square_circle() -> SimplicialComplex:
    return cycle_complex(4)


def _gl_join_and_action(n: int):
    k = join_all([_square_circle() for _ in range(n)])
    gens = []
    if n >= 2:
        swap = {(i, v): ((1, v) if i == 0 else (0, v) if i == 1 else (i, v))
                for (i, v) in k.vertices}
        gens.append(swap)
    if n >= 3:
        cyc = {(i, v): ((i + 1) % n, v) for (i, v) in k.vertices}
        gens.append(cyc)
    return k, gens


def _sl_link_and_action(n: int):
    model = None
    for _ in range(n):
        model = fan_p1xp1() if model is None else product_fan(model, fan_p1xp1())
    # ker alpha_n = {sum x_i = 0, sum y_i = 0}; saturated difference basis
    basis = []
    for i in range(n - 1):
        vx = [0] * (2 * n)
        vx[2 * i] = 1
        vx[2 * (i + 1)] = -1
        vy = [0] * (2 * n)
        vy[2 * i + 1] = 1
        vy[2 * (i + 1) + 1] = -1
        basis.append(tuple(vx))
        basis.append(tuple(vy))
    kernel_fan = intersect_fan_subspace(model, basis)
    kernel_fan = stellar_subdivide_until_simplicial(kernel_fan)
    link = link_complex(kernel_fan)
    # block permutations of (x_i, y_i) expressed in kernel coordinates
    gens = []
    perms = []
    if n >= 2:
        perms.append({0: 1, 1: 0, **{i: i for i in range(2, n)}})
    if n >= 3:
        perms.append({i: (i + 1) % n for i in range(n)})
    bmat = transpose([list(b) for b in basis])  # 2n x k columns
    for p in perms:
        vmap = {}
        for ray in link.vertices:
            amb = [sum(bmat[r][j] * ray[j] for j in range(len(ray))) for r in range(2 * n)]
            permuted = [0] * (2 * n)
            for i in range(n):
                permuted[2 * p[i]] = amb[2 * i]
                permuted[2 * p[i] + 1] = amb[2 * i + 1]
            sol = rat_solve([list(row) for row in bmat], permuted)
            if sol is None or any(x.denominator != 1 for x in sol):
                raise ComplexError("block permutation does not preserve the kernel lattice")
            vmap[ray] = primitive([x.numerator for x in sol])
        gens.append(vmap)
    return link, gens


def character_variety_complex(group: str, n: int, max_facets: int = 2_000_000) -> SimplicialComplex:
    """Quotient complex underlying the genus-one character-variety boundary.

    gl: (n-fold join of 4-cycles) / factor permutations; sl: link of the
    kernel fan of the coordinatewise sum map, quotiented the same way.
    """
    if not 1 <= n <= 3:
        raise ComplexError("desk scale handles n in {1, 2, 3}")
    if group == "gl":
        k, gens = _gl_join_and_action(n)
    elif group == "sl":
        if n < 2:
            raise ComplexError("the sl pipeline needs n >= 2")
        k, gens = _sl_link_and_action(n)
    else:
        raise ComplexError(f"unknown group {group!r}")
    return quotient(k, gens, max_facets=max_facets)


def character_variety_homology(group: str, n: int) -> HomologyProfile:
    """Homology profile of the orbit space, via orbit cells (no triangulation)."""
    if not 1 <= n <= 3:
        raise ComplexError("desk scale handles n in {1, 2, 3}")
    if group == "gl":
        k, gens = _gl_join_and_action(n)
    elif group == "sl":
        if n < 2:
            raise ComplexError("the sl pipeline needs n >= 2")
        k, gens = _sl_link_and_action(n)
    else:
        raise ComplexError(f"unknown group {group!r}")
    return quotient_homology(k, gens)


# --------------------------------------------------------------------------
# Sphere quotient map (numeric check) and Tate strata
# --------------------------------------------------------------------------

def sphere_quotient_map_check(n: int, samples, tolerance: float = 1e-9):
    """Numeric verification of the symmetric-quotient sphere map.

    The map sends unit vectors z in C^n to the normalized vector whose j-th
    entry is the coefficient of the degree-(n-j) term of prod (w - z_i),
    with the modulus replaced by its j-th root.  Checks: permutation orbits
    collapse, sampled distinct orbits stay distinct, images are unit vectors.
    """
    pts = np.asarray(samples, dtype=complex)
    if pts.ndim != 2 or pts.shape[1] != n:
        raise ValueError("samples must be an (N, n) complex array")
    norms = np.linalg.norm(pts, axis=1)
    if np.any(np.abs(norms - 1.0) > tolerance):
        raise ValueError("sample points must lie on the unit sphere")

    def coefficients(z):
        poly = np.array([1.0 + 0.0j])
        for zi in z:
            poly = np.convolve(poly, np.array([1.0, -zi]))
        return poly[1:]  # degree n-1 .. 0 coefficients

    def mapped(z):
        c = coefficients(z)
        r = np.abs(c)
        with np.errstate(divide="ignore", invalid="ignore"):
            roots = np.array([r[j] ** (1.0 / (j + 1)) for j in range(n)])
        phases = np.where(r > 0, c / np.where(r > 0, r, 1.0), 0.0)
        phi = roots * phases
        nv = np.linalg.norm(phi)
        if nv < tolerance:
            raise ArithmeticError("map degenerate at a sample (zero coefficient vector)")
        return phi / nv

    images = np.array([mapped(z) for z in pts])

    rng = np.random.default_rng(20960)
    orbit_failures = 0
    for idx in range(len(pts)):
        perm = rng.permutation(n)
        img2 = mapped(pts[idx][perm])
        if np.linalg.norm(img2 - images[idx]) > tolerance:
            orbit_failures += 1

    unit_failures = int(np.sum(np.abs(np.linalg.norm(images, axis=1) - 1.0) > tolerance))

    # sampled injectivity: any pair with (near-)equal images must be one orbit
    def same_orbit(a, b):
        za = pts[a][np.lexsort((pts[a].imag, pts[a].real))]
        zb = pts[b][np.lexsort((pts[b].imag, pts[b].real))]
        return bool(np.max(np.abs(za - zb)) < 1e-6)

    injectivity_failures = 0
    block = 512
    for start in range(0, len(pts), block):
        chunk = images[start:start + block]
        d2 = np.sum(np.abs(chunk[:, None, :] - images[None, :, :]) ** 2, axis=2)
        close = np.argwhere(d2 <= tolerance ** 2)
        for a_rel, b in close:
            a = start + int(a_rel)
            if a < b and not same_orbit(a, int(b)):
                injectivity_failures += 1

    return {
        "n": n,
        "samples": len(pts),
        "orbit_collapse_failures": orbit_failures,
        "injectivity_failures": injectivity_failures,
        "unit_norm_failures": unit_failures,
        "passed": orbit_failures == 0 and injectivity_failures == 0 and unit_failures == 0,
        "tolerance": tolerance,
    }


def tate_strata(n: int, alpha):
    """Classification of the special-fibre strata of the multiplication-kernel
    closure in a product of degenerating multiplicative groups.

    Case table on s = |alpha|: s > 0 has no special strata; s = 0 has one
    boundary divisor with local model G_m^{n-1} x A^1; s < 0 classifies the
    (J, j) strata: contained iff |J| + s in {0, 1}, cut by the x-coordinate
    when the sum is 0 and by the y-coordinate when it is 1.
    """
    alpha = list(alpha)
    if not alpha:
        raise ValueError("alpha must be nonempty")
    if n < 2:
        raise ValueError("the classification needs n >= 2")
    if len(alpha) != n:
        raise ValueError("alpha must have length n")
    s = sum(alpha)
    result = {"n": n, "alpha": list(alpha), "total": s}
    if s > 0:
        result["case"] = "generic"
        result["strata"] = []
        return result
    if s == 0:
        result["case"] = "single_divisor"
        result["local_model"] = "Gm^(n-1) x A1"
        result["divisor_coordinate"] = "y"
        result["strata"] = [{"J": list(range(1, n + 1)), "contained": True}]
        return result
    result["case"] = "negative"
    strata = []
    for size in range(1, n + 1):
        for J in itertools.combinations(range(1, n + 1), size):
            for j in J:
                val = size + s
                contained = val in (0, 1)
                entry = {"J": list(J), "j": j, "contained": contained}
                if contained:
                    entry["divisor_coordinate"] = "x" if val == 0 else "y"
                    # at the generic point exactly one coordinate of the
                    # distinguished pair cuts the fibre; the other is a unit,
                    # so the deeper boundary is met in codimension two
                    entry["codim_two_boundary"] = True
                strata.append(entry)
    result["strata"] = strata
    return result
