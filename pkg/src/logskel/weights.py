"""Log discrepancy, weight functions, Kontsevich-Soibelman and essential
skeletons, residues, the slice comparison, and the Gauss exponent identity.

Weight formulas on a chart with dlog index set P and numerator f:

  trivial mode:  wt = v(f) + m * sum_{h in B\\P} v(g_h)
                        + m * sum_i alpha_i (1 - a_i)
  dvf mode:      wt = v(f) + m * (1 + sum_{h in H\\P} v(g_h))

with g_h the chart equations of the boundary components outside the dlog
set, B the full boundary, H the horizontal part, a_i the pair coefficients
and alpha the weight vector.  The dvf form must be in chart normal form:
exactly one vertical chart component outside P (the eliminated coordinate).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .logstructure import LogChart, PairDescription
from .rationals import INF, fmt, is_inf, q, xadd, xmin
from .valuations import (
    LaurentRational,
    SkeletonPoint,
    ValuationError,
    chart_weight_vector,
    evaluate,
)


class WeightError(ValueError):
    pass


class NormalFormError(WeightError):
    pass


@dataclass
class PluriForm:
    """A logarithmic m-pluricanonical form in chart normal form.

    ``numerators`` maps chart index -> LaurentRational.  The dlog set P
    holds component ids; one global form may present against different dlog
    patterns in different charts (recentring a chart trades one dlog
    generator for another), so ``chart_dlog`` can override P per chart.
    The presentations are fixture data, not derived from one another.
    """

    m: int
    dlog: frozenset
    numerators: dict
    chart_dlog: dict = None

    def __post_init__(self):
        if self.m < 1:
            raise WeightError("m must be a positive integer")
        self.dlog = frozenset(self.dlog)
        if self.chart_dlog is None:
            self.chart_dlog = {}
        self.chart_dlog = {int(i): frozenset(s) for i, s in self.chart_dlog.items()}
        for f in self.numerators.values():
            if f.is_zero():
                raise WeightError("the zero form has no weight function")

    def numerator_for(self, chart_index: int) -> LaurentRational:
        if chart_index not in self.numerators:
            raise WeightError(f"no presentation of the form on chart {chart_index}")
        return self.numerators[chart_index]

    def dlog_for(self, chart_index: int) -> frozenset:
        return self.chart_dlog.get(chart_index, self.dlog)

    def power(self, k: int) -> "PluriForm":
        return PluriForm(m=self.m * k, dlog=self.dlog,
                         numerators={i: f ** k for i, f in self.numerators.items()},
                         chart_dlog=dict(self.chart_dlog))

    def to_json_dict(self):
        charts = []
        for i, f in sorted(self.numerators.items()):
            entry = {"chart": i, "numerator": f.to_json_dict()}
            if i in self.chart_dlog and self.chart_dlog[i] != self.dlog:
                entry["dlog"] = sorted(self.chart_dlog[i])
            charts.append(entry)
        return {"schema": "1", "m": self.m, "dlog": sorted(self.dlog), "charts": charts}

    @staticmethod
    def from_json_dict(doc) -> "PluriForm":
        if "charts" in doc:
            nums = {int(e["chart"]): LaurentRational.from_json_dict(e["numerator"])
                    for e in doc["charts"]}
            overrides = {int(e["chart"]): frozenset(e["dlog"])
                         for e in doc["charts"] if "dlog" in e}
        else:
            nums = {0: LaurentRational.from_json_dict(doc["numerator"])}
            overrides = {}
        return PluriForm(m=int(doc["m"]), dlog=frozenset(doc["dlog"]),
                         numerators=nums, chart_dlog=overrides)


@dataclass(frozen=True)
class SubCone:
    """A polyhedral piece of one skeleton face.

    ``zero_set`` lists generators pinned to 0 (coordinate subcones, the
    trivial-mode output); ``vertices``/``rays`` describe dvf argmin
    polyhedra inside the normalized slice.
    """

    kato: tuple
    zero_set: tuple = ()
    vertices: tuple = ()
    rays: tuple = ()

    def to_json_dict(self):
        out = {"kato_point": list(self.kato)}
        if self.zero_set:
            out["constraints"] = [{"generator": g, "eq": "0"} for g in self.zero_set]
        if self.vertices:
            out["vertices"] = [[fmt(x) for x in v] for v in self.vertices]
        if self.rays:
            out["rays"] = [[fmt(x) for x in r] for r in self.rays]
        return out


@dataclass
class SubFan:
    """A union of subcones of skeleton faces, with the attained minimum."""

    faces: list
    min_value: Fraction = Fraction(0)

    def face_keys(self):
        return sorted({f.kato for f in self.faces})

    def to_json_dict(self):
        return {
            "faces": [f.to_json_dict() for f in
                      sorted(self.faces, key=lambda f: (f.kato, f.zero_set))],
            "min_value": fmt(self.min_value),
        }


def _chart_for_face(pair: PairDescription, kato, form: PluriForm = None):
    for idx, chart in enumerate(pair.charts):
        if chart.covers(kato) and (form is None or idx in form.numerators):
            return idx, chart
    raise WeightError(f"no chart (with a form presentation) covers {list(kato)}")


def log_discrepancy(pair: PairDescription, point: SkeletonPoint) -> Fraction:
    """A_(X,D) at a finite skeleton point: sum_i alpha_i (1 - a_i).

    The linear extension from the divisorial generators of the face; for
    closure points classify first and compute on the trace.
    """
    if pair.mode != "trivial":
        raise WeightError("log discrepancy is computed in trivial mode")
    if not point.is_finite():
        raise WeightError("extended weights: classify the point and use the trace pair")
    total = Fraction(0)
    for cid, w in zip(point.kato, point.weights):
        a = pair.components[cid].coefficient
        total += w * (1 - a)
    return total


def _dvf_normal_form_check(pair: PairDescription, chart: LogChart, dlog: frozenset):
    vertical_outside = [cid for cid in chart.coordinate_components()
                        if pair.components[cid].vertical and cid not in dlog]
    if len(vertical_outside) != 1:
        raise NormalFormError(
            f"dvf normal form needs exactly one vertical chart component outside "
            f"the dlog set; found {sorted(vertical_outside)}")


def _outside_dlog_equation(chart, cid):
    """Chart equation of a boundary component outside the dlog set.

    Falls back to the cutting coordinate; None when the component does not
    meet the chart at all (its equation is a unit there).
    """
    eq = chart.equations.get(cid)
    if eq is not None:
        return eq
    if cid in chart.coordinate_components():
        return LaurentRational.coordinate(chart.axis(cid), len(chart.coordinates))
    return None


def _xsmul(k: int, x):
    return INF if is_inf(x) else k * x


def _weight_on_vector(pair, chart, chart_index, form, coord_weights, kato):
    """Weight at the point of the face ``kato`` with the given chart weights."""
    f = form.numerator_for(chart_index)
    dlog = form.dlog_for(chart_index)
    val = f.value(coord_weights)
    if pair.mode == "dvf":
        _dvf_normal_form_check(pair, chart, dlog)
        extra = Fraction(0)
        for cid in sorted(pair.horizontal_ids() - dlog):
            eq = _outside_dlog_equation(chart, cid)
            if eq is None:
                continue
            extra = xadd(extra, eq.value(coord_weights))
        return xadd(val, _xsmul(form.m, xadd(1, extra)))
    # trivial mode
    extra = Fraction(0)
    for cid in sorted(set(pair.components) - dlog):
        eq = _outside_dlog_equation(chart, cid)
        if eq is None:
            continue
        extra = xadd(extra, eq.value(coord_weights))
    correction = Fraction(0)
    for cid in kato:
        a = pair.components[cid].coefficient
        if a != 1:
            w = coord_weights[chart.axis(cid)]
            correction = xadd(correction, _xsmul(1, w) if is_inf(w) else (1 - a) * w)
    return xadd(val, xadd(_xsmul(form.m, extra), _xsmul(form.m, correction)))


def weight(form: PluriForm, pair: PairDescription, point: SkeletonPoint):
    """Weight of a pluricanonical form at a skeleton point (either mode)."""
    idx, chart = _chart_for_face(pair, point.kato, form)
    coord_weights = chart_weight_vector(point, chart)
    return _weight_on_vector(pair, chart, idx, form, coord_weights, point.kato)


# -- Kontsevich-Soibelman skeletons ----------------------------------------


def _zero_options(expr, chart, kato):
    """Per-term coordinate conditions making the tropical value vanish.

    Each minimal-coefficient term yields the set of face components whose
    weight must be pinned to 0; the value is then zero on that subcone.
    """
    den = expr.denominator
    if len(den) != 1:
        raise WeightError("trivial-mode minimization expects a monomial denominator")
    dexp = den[0].exps
    options = []
    for t in expr.numerator:
        if t.coeff_val != 0:
            continue
        touched = set()
        for i in range(len(t.exps)):
            if t.exps[i] - dexp[i] == 0:
                continue
            cid = chart.cut.get(chart.coordinates[i])
            if cid is not None and cid in kato:
                touched.add(cid)
            # exponents on unit directions of this face contribute 0 anyway
        options.append(frozenset(touched))
    return options


def _trivial_ks_face(pair, chart, chart_index, form, kato):
    """Coordinate subcones of one face where the trivial weight vanishes.

    The weight is a sum of tropical values plus the coefficient correction;
    each summand vanishes on a union of coordinate subcones, so the zero
    locus is the union, over choices of one vanishing term per summand, of
    the intersections.  A generic-point evaluation double-checks each piece.
    """
    kato = tuple(sorted(kato))
    forced = {cid for cid in kato if pair.components[cid].coefficient != 1}
    summands = [_zero_options(form.numerator_for(chart_index), chart, kato)]
    for cid in sorted(set(pair.components) - form.dlog_for(chart_index)):
        eq = _outside_dlog_equation(chart, cid)
        if eq is None:
            continue
        summands.append(_zero_options(eq, chart, kato))
    pieces = set()
    for choice in itertools.product(*summands):
        zero = frozenset(forced | set().union(*choice) if choice else forced)
        pieces.add(tuple(sorted(zero)))
    # keep maximal subcones (smallest zero sets) and verify them generically
    minimal = [z for z in pieces if not any(set(w) < set(z) for w in pieces)]
    verified = []
    primes = [2, 3, 5, 7, 11, 13, 17, 19]
    for z in sorted(minimal):
        witness = {}
        alive = [c for c in kato if c not in z]
        for k, cid in enumerate(alive):
            witness[cid] = Fraction(primes[k % len(primes)], k + 1)
        point = SkeletonPoint.make(kato, {c: witness.get(c, 0) for c in kato})
        coord_weights = chart_weight_vector(point, chart)
        if _weight_on_vector(pair, chart, chart_index, form, coord_weights, kato) == 0:
            verified.append(SubCone(kato=kato, zero_set=z))
    return verified


def _face_rays_check(pair, chart, chart_index, form, kato):
    """Regularity on one face: weight nonnegative on every ray generator."""
    arity = len(chart.coordinates)
    for cid in kato:
        ray = [Fraction(0)] * arity
        ray[chart.axis(cid)] = Fraction(1)
        val = _weight_on_vector(pair, chart, chart_index, form, ray, kato)
        if not is_inf(val) and val < 0:
            return cid
    return None


def ks_skeleton(pair: PairDescription, form: PluriForm) -> SubFan:
    """Minimality locus of the weight function of ``form``.

    Trivial mode: the minimum is 0 (attained at the trivial valuation) and
    the locus is a union of coordinate subcones per face.  Dvf mode: the
    weight is minimized over each normalized slice by enumerating the
    vertices of the subdivision induced by the active linear pieces; the
    full argmin polyhedron is reported.
    """
    fan = pair.kato_fan()
    offender = None
    for key in fan.points:
        if not key:
            continue
        try:
            idx, chart = _chart_for_face(pair, key, form)
        except WeightError:
            continue
        bad = _face_rays_check(pair, chart, idx, form, key)
        if bad is not None:
            offender = (key, bad)
            break
    if offender is not None:
        raise WeightError(
            f"form is not regular: weight unbounded below on the ray {offender[1]} "
            f"of the face {list(offender[0])}")

    if pair.mode == "trivial":
        faces = []
        for key in fan.points:
            try:
                idx, chart = _chart_for_face(pair, key, form)
            except WeightError:
                if key == ():
                    faces.append(SubCone(kato=(), zero_set=()))
                continue
            faces.extend(_trivial_ks_face(pair, chart, idx, form, key))
        return SubFan(faces=_dedupe_subcones(faces), min_value=Fraction(0))

    # dvf: per-face linear programming over the compact slice
    best = INF
    argmin = []
    for key in fan.points:
        if not key:
            continue
        try:
            idx, chart = _chart_for_face(pair, key, form)
        except WeightError:
            continue
        b = pair.pi_vector(key)
        if all(x == 0 for x in b):
            continue  # purely horizontal face: no dvf points
        value, verts, rays = _minimize_face_slice(pair, chart, idx, form, key, b)
        if value is None:
            continue
        if is_inf(best) or value < best:
            best = value
            argmin = [(key, verts, rays)]
        elif value == best:
            argmin.append((key, verts, rays))
    if is_inf(best):
        raise WeightError("the pair has no vertical faces; nothing to slice")
    faces = [SubCone(kato=tuple(sorted(k)), vertices=tuple(map(tuple, vs)),
                     rays=tuple(map(tuple, rs)))
             for k, vs, rs in argmin]
    return SubFan(faces=_canonical_dvf_faces(faces), min_value=best)


def _dedupe_subcones(faces):
    out = {}
    for f in faces:
        # drop subcones contained in another declared subcone of a larger face
        out[(f.kato, f.zero_set)] = f
    # a subcone of a face equals a subcone of a smaller face when the zero
    # set removes the difference; keep the minimal-face representative
    keys = set(out)
    drop = set()
    for (kato, zero) in keys:
        alive = tuple(sorted(set(kato) - set(zero)))
        for (kato2, zero2) in keys:
            if (kato2, zero2) == (kato, zero):
                continue
            alive2 = tuple(sorted(set(kato2) - set(zero2)))
            if alive == alive2 and set(kato2) < set(kato):
                drop.add((kato, zero))
    return [out[k] for k in sorted(keys - drop)]


def _canonical_dvf_faces(faces):
    """Push argmin vertices to the minimal face supporting them."""
    out = []
    seen = set()
    for f in faces:
        if not f.vertices:
            out.append(f)
            continue
        support = set()
        for v in f.vertices:
            support |= {c for c, x in zip(f.kato, v) if x != 0}
        for r in f.rays:
            support |= {c for c, x in zip(f.kato, r) if x != 0}
        kato = tuple(sorted(support)) if support else f.kato
        vmap = [f.kato.index(c) for c in kato]
        verts = tuple(tuple(v[i] for i in vmap) for v in f.vertices)
        rays = tuple(tuple(r[i] for i in vmap) for r in f.rays)
        key = (kato, tuple(sorted(verts)), tuple(sorted(rays)))
        if key not in seen:
            seen.add(key)
            out.append(SubCone(kato=kato, vertices=verts, rays=rays))
    return out


def _minimize_face_slice(pair, chart, chart_index, form, kato, b):
    """Exact minimum of the weight over {<b, alpha> = 1, alpha >= 0}.

    Enumerates candidate vertices: slice corners plus intersections with the
    loci where two linear pieces of the weight agree.  Returns (min, argmin
    vertices, argmin recession rays); None when the slice is empty.
    """
    kato = tuple(sorted(kato))
    n = len(kato)
    axes = [chart.axis(c) for c in kato]
    arity = len(chart.coordinates)

    def lift(alpha):
        w = [Fraction(0)] * arity
        for x, ax in zip(alpha, axes):
            w[ax] = x
        return w

    def wt(alpha):
        return _weight_on_vector(pair, chart, chart_index, form, lift(alpha), kato)

    # linear pieces: rows of (gradient, constant) of every min-term involved
    pieces = []
    f = form.numerator_for(chart_index)
    for t in f.numerator:
        grad = [Fraction(t.exps[ax]) for ax in axes]
        pieces.append(grad)
    for t in f.denominator:
        grad = [Fraction(-t.exps[ax]) for ax in axes]
        pieces.append(grad)
    dlog = form.dlog_for(chart_index)
    eq_ids = (pair.horizontal_ids() - dlog) if pair.mode == "dvf" \
        else (set(pair.components) - dlog)
    for cid in sorted(eq_ids):
        eq = _outside_dlog_equation(chart, cid)
        if eq is None:
            continue
        for t in list(eq.numerator) + list(eq.denominator):
            pieces.append([Fraction(t.exps[ax]) for ax in axes])

    # hyperplanes: coordinate walls, slice, and piece-vs-piece ties
    hyperplanes = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        hyperplanes.append((e, Fraction(0)))
    hyperplanes.append(([Fraction(x) for x in b], Fraction(1)))
    for p1, p2 in itertools.combinations(pieces, 2):
        diff = [a - c for a, c in zip(p1, p2)]
        if any(diff):
            hyperplanes.append((diff, Fraction(0)))

    slice_normal = [Fraction(x) for x in b]
    candidates = set()
    from .lattice import rat_rank, rat_solve

    for combo in itertools.combinations(range(len(hyperplanes)), n - 1) if n > 1 else [()]:
        rows = [slice_normal] + [hyperplanes[i][0] for i in combo]
        rhs = [Fraction(1)] + [hyperplanes[i][1] for i in combo]
        if rat_rank(rows) != n:
            continue
        sol = rat_solve(rows, rhs)
        if sol is None:
            continue
        if all(x >= 0 for x in sol):
            candidates.add(tuple(sol))
    if not candidates:
        return None, [], []

    # recession rays of the slice (horizontal directions with b_i = 0)
    recession = []
    for i in range(n):
        if b[i] == 0:
            ray = [Fraction(0)] * n
            ray[i] = Fraction(1)
            recession.append(tuple(ray))
    for ray in recession:
        base = min(candidates)
        v0 = wt(base)
        v1 = wt(tuple(x + y for x, y in zip(base, ray)))
        if v1 < v0:
            raise WeightError(
                f"weight decreases along the unbounded direction {ray} of face {list(kato)}")

    values = {c: wt(c) for c in candidates}
    finite = {c: v for c, v in values.items() if not is_inf(v)}
    if not finite:
        return None, [], []
    m = min(finite.values())
    arg_vertices = sorted(c for c, v in finite.items() if v == m)
    arg_rays = []
    for ray in recession:
        base = arg_vertices[0]
        if wt(tuple(x + y for x, y in zip(base, ray))) == m:
            arg_rays.append(ray)
    return m, arg_vertices, arg_rays


def face_slice_polytope(pair, kato, b):
    """Vertices/rays of the normalized slice of one face (used by slice_dvf)."""
    kato = tuple(sorted(kato))
    verts = []
    rays = []
    for i, c in enumerate(kato):
        e = [Fraction(0)] * len(kato)
        if b[i] > 0:
            e[i] = Fraction(1, b[i])
            verts.append(tuple(e))
        else:
            e[i] = Fraction(1)
            rays.append(tuple(e))
    return verts, rays


def essential_skeleton(pair: PairDescription, forms) -> SubFan:
    """Union of Kontsevich-Soibelman skeletons over the given forms.

    For pairs flagged logCY with a global generator this is the subfan of
    faces all of whose components have coefficient one.
    """
    if pair.logcy:
        fan = pair.kato_fan()
        faces = []
        for key in fan.points:
            if all(pair.components[c].coefficient == 1 for c in key):
                faces.append(SubCone(kato=tuple(sorted(key)), zero_set=()))
        return SubFan(faces=faces, min_value=Fraction(0))
    forms = list(forms)
    if not forms:
        import warnings

        warnings.warn("essential skeleton of an empty form list is empty")
        return SubFan(faces=[], min_value=Fraction(0))
    faces = []
    value = None
    for form in forms:
        sub = ks_skeleton(pair, form)
        faces.extend(sub.faces)
        value = sub.min_value if value is None else min(value, sub.min_value)
    return SubFan(faces=_dedupe_subcones(faces), min_value=value)


def toric_essential_skeleton(fan) -> SubFan:
    """Essential skeleton of a toric pair: the whole skeleton of the fan."""
    from .logstructure import kato_fan_toric

    kfan = kato_fan_toric(fan)
    return SubFan(faces=[SubCone(kato=p.key if isinstance(p.key, tuple) else (p.key,))
                         for p in kfan.points.values()],
                  min_value=Fraction(0))


def residue(form: PluriForm, pair: PairDescription, stratum) -> PluriForm:
    """Residue of a form along a stratum contained in its dlog set.

    The numerator keeps exactly the terms with zero exponent on the stratum
    coordinates (which are deleted); the dlog set drops the stratum.  Chart
    indices follow ``pair.trace_pair(stratum)`` so the residue can be used
    with the trace pair directly.
    """
    stratum = frozenset(stratum)
    nums = {}
    overrides = {}
    took_residue = False
    for trace_index, idx in enumerate(pair.trace_chart_indices(stratum)):
        chart = pair.charts[idx]
        if idx not in form.numerators:
            continue
        if not stratum <= form.dlog_for(idx):
            raise WeightError(
                "residue undefined: no log pole along the stratum in this chart")
        drop = sorted((chart.axis(c) for c in stratum), reverse=True)
        restricted = form.numerators[idx].restrict(drop)
        if restricted is None:
            raise WeightError("the residue along this stratum vanishes identically")
        nums[trace_index] = restricted
        overrides[trace_index] = form.dlog_for(idx) - stratum
        took_residue = True
    if not took_residue:
        raise WeightError(f"no chart presents the form along {sorted(stratum)}")
    base = overrides[min(overrides)]
    return PluriForm(m=form.m, dlog=base, numerators=nums,
                     chart_dlog={i: s for i, s in overrides.items() if s != base})


@dataclass
class SliceCell:
    """One compact-or-unbounded cell of the normalized slice of a face."""

    kato: tuple
    vertices: tuple  # vertex coordinates over ``kato``
    rays: tuple

    def is_compact(self) -> bool:
        return not self.rays

    def to_json_dict(self):
        return {
            "kato_point": list(self.kato),
            "vertices": [[fmt(x) for x in v] for v in self.vertices],
            "rays": [[fmt(x) for x in r] for r in self.rays],
        }


@dataclass
class SliceComplex:
    cells: list
    notices: list = field(default_factory=list)

    def to_simplicial(self):
        """The dual-complex triangulation when every cell is a simplex.

        Each compact cell of a face with positive multiplicities is the
        simplex on that face's components (vertex i sits at e_i / b_i).
        """
        from .complexes import SimplicialComplex

        facets = []
        for cell in self.cells:
            if not cell.is_compact():
                raise WeightError("unbounded slice cell; no simplicial model")
            if len(cell.vertices) != len(cell.kato):
                raise WeightError("slice cell is not a simplex on its components")
            facets.append(frozenset(cell.kato))
        return SimplicialComplex.from_facets(facets)

    def to_json_dict(self):
        return {
            "cells": [c.to_json_dict() for c in
                      sorted(self.cells, key=lambda c: c.kato)],
            "notices": sorted(self.notices),
        }


def slice_dvf(pair: PairDescription, subfan: SubFan = None) -> SliceComplex:
    """Intersect skeleton faces with the hyperplane <b, alpha> = 1.

    Faces with identically zero multiplicities (purely horizontal) are
    excluded with a notice; mixed faces give unbounded cells carried by
    their recession rays.
    """
    fan = pair.kato_fan()
    keys = subfan.face_keys() if subfan is not None else sorted(k for k in fan.points)
    cells = []
    notices = []
    covered = set()
    for key in sorted(keys, key=lambda k: (-len(k), k)):
        if not key:
            continue
        b = pair.pi_vector(key)
        if all(x == 0 for x in b):
            notices.append(f"face {list(key)} is purely horizontal; excluded")
            continue
        if any(set(key) < set(other) for other in keys):
            continue  # only maximal faces carry cells; faces glue along them
        verts, rays = face_slice_polytope(pair, key, b)
        cells.append(SliceCell(kato=tuple(sorted(key)), vertices=tuple(verts),
                               rays=tuple(rays)))
        covered.add(key)
    return SliceComplex(cells=cells, notices=notices)


def gauss_weight_identity(c, a, l: int, m: int):
    """Exact exponent bookkeeping for the Gauss ground-field extension.

    With r the extension radius for a divisorial point of weight data
    (c, a) and blow-up codimension l: log r = -c(a+1); the trivially-valued
    metric exponent is -c m (1 + (l-1) a); the discretely-valued one is
    -c m (2 + l a); the identity -m log r + log||.||_disc = log||.||_triv
    holds in exact arithmetic.
    """
    c = q(c)
    a = q(a)
    if c <= 0:
        raise WeightError("c must be positive")
    if a < 0:
        raise WeightError("a must be nonnegative")
    if l < 1 or m < 1:
        raise WeightError("l and m must be positive integers")
    log_r = -c * (a + 1)
    log_triv = -c * m * (1 + (l - 1) * a)
    log_disc = -c * m * (2 + l * a)
    holds = (-m * log_r + log_disc) == log_triv
    return {
        "c": c,
        "a": a,
        "l": l,
        "m": m,
        "log_r": log_r,
        "log_norm_trivial": log_triv,
        "log_norm_discrete": log_disc,
        "identity_holds": holds,
    }
