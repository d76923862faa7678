"""Batch front end: ingest pair/form JSON, run computations, emit reports.

All output is deterministic JSON (sorted keys); rationals serialize as
strings "p/q".  Exit codes: 0 success, 2 validation error, 3 assertion
mismatch in the ``fixtures`` regression run.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fixtures as fx
from .complexes import (
    ComplexError,
    SimplicialComplex,
    character_variety_homology,
    homology,
    link_complex,
    quotient,
    sphere_profile,
    sphere_quotient_map_check,
    tate_strata,
)
from .logstructure import LogStructureError, PairDescription, kato_fan_snc, kato_fan_toric
from .polyhedra import Fan, FanError, compactified_fan_strata
from .rationals import fmt, parse_ext, q
from .valuations import (
    SkeletonPoint,
    ValuationError,
    classify_closure_point,
    classify_closure_point_toric,
)
from .weights import (
    PluriForm,
    WeightError,
    essential_skeleton,
    gauss_weight_identity,
    ks_skeleton,
    residue,
    slice_dvf,
    weight,
)

VALIDATION_ERRORS = (LogStructureError, FanError, ValuationError, WeightError,
                     ComplexError, KeyError, ValueError, json.JSONDecodeError)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SystemExitWithCode(2, f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    except OSError as exc:
        raise SystemExitWithCode(2, f"{path}: {exc}")


class SystemExitWithCode(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _emit(doc, args):
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    out = getattr(args, "output", None)
    if out:
        if not os.path.isabs(out):
            out = os.path.join(os.environ.get("LOGSKEL_OUTPUT_DIR", "."), out)
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_pair(args) -> PairDescription:
    return PairDescription.from_json_dict(_load_json(args.pair))


def _load_form(args) -> PluriForm:
    return PluriForm.from_json_dict(_load_json(args.form))


def _load_points(path):
    doc = _load_json(path)
    return [SkeletonPoint.from_json_dict(p) for p in doc["points"]]


def cmd_skeleton(args):
    if args.fan:
        fan = Fan.from_json_dict(_load_json(args.fan))
        kf = kato_fan_toric(fan)
        points = [{"key": list(map(str, p.key[1])) if p.key else [],
                   "monoid_rank": p.rank} for p in kf.points.values()]
        doc = {"schema": "1", "command": "skeleton", "kind": "toric",
               "kato_points": len(kf),
               "faces": sorted(points, key=lambda e: (len(e["key"]), e["key"]))}
    else:
        pair = _load_pair(args)
        kf = pair.kato_fan()
        doc = {"schema": "1", "command": "skeleton", "kind": "snc",
               "kato_points": len(kf),
               "faces": sorted([{"key": list(k), "monoid_rank": kf.points[k].rank}
                                for k in kf.points], key=lambda e: (len(e["key"]), e["key"])),
               "specializations": sorted([[list(a), list(b)] for a, b in kf.order])}
    _emit(doc, args)


def cmd_closure(args):
    doc_points = _load_json(args.points)
    out = []
    if args.fan:
        fan = Fan.from_json_dict(_load_json(args.fan))
        strata = compactified_fan_strata(fan)
        for p in doc_points["points"]:
            stratum, finite = classify_closure_point_toric(
                fan, p["kato_point"], p["weights"])
            out.append({"point": p, "stratum_cone": list(stratum),
                        "finite_values": [[list(h), fmt(v)] for h, v in finite]})
        doc = {"schema": "1", "command": "closure", "strata_count": len(strata),
               "stratum_dimensions": sorted((s.dim() for _, s in strata), reverse=True),
               "classified": out}
    else:
        pair = _load_pair(args)
        fan = pair.kato_fan()
        for pt in _load_points(args.points):
            stratum, residualpt = classify_closure_point(pt, fan)
            out.append({"point": pt.to_json_dict(), "stratum": list(stratum),
                        "trace_point": residualpt.to_json_dict()})
        doc = {"schema": "1", "command": "closure", "classified": out}
    _emit(doc, args)


def cmd_weight(args):
    pair = _load_pair(args)
    form = _load_form(args)
    values = []
    for pt in _load_points(args.points):
        values.append({"point": pt.to_json_dict(), "weight": fmt(weight(form, pair, pt))})
    _emit({"schema": "1", "command": "weight", "values": values}, args)


def cmd_ks(args):
    pair = _load_pair(args)
    form = _load_form(args)
    sub = ks_skeleton(pair, form)
    _emit({"schema": "1", "command": "ks", **sub.to_json_dict()}, args)


def cmd_essential(args):
    pair = _load_pair(args)
    forms = [PluriForm.from_json_dict(_load_json(p)) for p in (args.form or [])]
    sub = essential_skeleton(pair, forms)
    _emit({"schema": "1", "command": "essential", **sub.to_json_dict()}, args)


def cmd_slice(args):
    pair = _load_pair(args)
    sub = None
    if args.essential:
        sub = essential_skeleton(pair, [])
    sc = slice_dvf(pair, sub)
    doc = {"schema": "1", "command": "slice", **sc.to_json_dict()}
    try:
        simp = sc.to_simplicial()
        doc["complex"] = simp.to_json_dict()
        doc["homology"] = homology(simp).to_json_dict()
    except WeightError as exc:
        doc["simplicial"] = f"unavailable: {exc}"
    _emit(doc, args)


def cmd_residue(args):
    pair = _load_pair(args)
    form = _load_form(args)
    res = residue(form, pair, set(args.stratum))
    tracep = pair.trace_pair(set(args.stratum))
    doc = {"schema": "1", "command": "residue",
           "residue_form": res.to_json_dict(),
           "trace_pair": tracep.to_json_dict()}
    if args.ks:
        doc["ks"] = ks_skeleton(tracep, res).to_json_dict()
    _emit(doc, args)


def cmd_dual_complex(args):
    if args.fan:
        fan = Fan.from_json_dict(_load_json(args.fan))
        cx = link_complex(fan)
    else:
        pair = _load_pair(args)
        facets = [frozenset(s) for s in pair.strata if s]
        cx = SimplicialComplex.from_facets(facets)
    doc = {"schema": "1", "command": "dual-complex", "complex": cx.to_json_dict(),
           "homology": homology(cx).to_json_dict()}
    if args.off:
        _write_off(cx, args.off)
        doc["off"] = args.off
    _emit(doc, args)


def _write_off(cx: SimplicialComplex, path):
    """Facet dump in OFF format with a deterministic circle layout."""
    import math

    n = len(cx.vertices)
    index = {v: i for i, v in enumerate(cx.vertices)}
    lines = ["OFF", f"{n} {len(cx.facets)} 0"]
    for i in range(n):
        ang = 2 * math.pi * i / max(n, 1)
        lines.append(f"{math.cos(ang):.6f} {math.sin(ang):.6f} 0.000000")
    for f in cx.facets:
        idx = sorted(index[v] for v in f)
        lines.append(" ".join([str(len(idx))] + [str(i) for i in idx]))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_homology(args):
    cx = SimplicialComplex.from_json_dict(_load_json(args.complex))
    _emit({"schema": "1", "command": "homology",
           "homology": homology(cx).to_json_dict()}, args)


def cmd_character_variety(args):
    prof = character_variety_homology(args.group, args.n)
    expected_dim = 2 * args.n - 1 if args.group == "gl" else 2 * args.n - 3
    doc = {
        "schema": "1",
        "command": "character-variety",
        "group": args.group,
        "n": args.n,
        "homology": prof.to_json_dict(),
        "sphere_dimension": expected_dim,
        "matches_sphere": prof.is_sphere(expected_dim),
    }
    _emit(doc, args)


def cmd_tate(args):
    doc = tate_strata(args.n, args.alpha)
    _emit({"schema": "1", "command": "tate", **doc}, args)


def cmd_gauss(args):
    rec = gauss_weight_identity(q(args.c), q(args.a), args.l, args.m)
    doc = {
        "schema": "1",
        "command": "gauss",
        "c": fmt(rec["c"]),
        "a": fmt(rec["a"]),
        "l": rec["l"],
        "m": rec["m"],
        "log_r": fmt(rec["log_r"]),
        "log_norm_trivial": fmt(rec["log_norm_trivial"]),
        "log_norm_discrete": fmt(rec["log_norm_discrete"]),
        "identity_holds": rec["identity_holds"],
    }
    _emit(doc, args)


def cmd_sphere_check(args):
    import numpy as np

    rng = np.random.default_rng(args.seed)
    z = rng.normal(size=(args.samples, args.n)) + 1j * rng.normal(size=(args.samples, args.n))
    z = z / np.linalg.norm(z, axis=1, keepdims=True)
    rep = sphere_quotient_map_check(args.n, z, tolerance=args.tolerance)
    rep = dict(rep)
    _emit({"schema": "1", "command": "sphere-check", **rep}, args)


# --------------------------------------------------------------------------
# fixtures: the bundled paper regression suite
# --------------------------------------------------------------------------

def _fixture_checks():
    from .polyhedra import fan_p2
    from .logstructure import kato_fan_toric

    checks = []

    def check(name, fn):
        checks.append((name, fn))

    def c_strata():
        strata = compactified_fan_strata(fan_p2())
        dims = sorted((s.dim() for _, s in strata), reverse=True)
        return len(strata) == 7 and dims == [2, 1, 1, 1, 0, 0, 0]

    check("compactified P2: 7 strata of dimensions {2,1,1,1,0,0,0}", c_strata)

    def c_kato_figure():
        pair = fx.strict_inclusion_pair()
        keys = set(pair.kato_fan().points)
        want = {(), ("D1",), ("D2",), ("D3",), ("D4",), ("D1", "D2"), ("D1", "D3"),
                ("D2", "D3"), ("D1", "D2", "D3"), ("D2", "D4"), ("D3", "D4"),
                ("D2", "D3", "D4")}
        return keys == want

    check("strict-inclusion pair: Kato points match the figure's faces", c_kato_figure)

    check("toric P2: 7 Kato points", lambda: len(kato_fan_toric(fan_p2())) == 7)

    def c_normalize():
        from .valuations import normalize_dvf

        pt = SkeletonPoint.make(("D1", "D2", "D3"), [1, 0, 0])
        out = normalize_dvf(pt, {"D1": 2, "D2": 1, "D3": 1})
        return out.weights == (Fraction(1, 2), Fraction(0), Fraction(0))

    check("normalize: ord_D1 with multiplicity 2 -> (1/2,0,0)", c_normalize)

    def c_weights():
        pair = fx.strict_inclusion_pair()
        form = fx.strict_inclusion_form()
        got = {d: weight(form, pair, pt) for d, pt in fx.STRICT_INCLUSION_DIVISORIAL.items()}
        return got == fx.STRICT_INCLUSION_WEIGHTS

    check("weights at v_D1, v_D2, v_D3 are exactly 2, 3, 3", c_weights)

    def c_ks():
        pair = fx.strict_inclusion_pair()
        sub = ks_skeleton(pair, fx.strict_inclusion_form())
        return (sub.min_value == 2 and len(sub.faces) == 1
                and sub.faces[0].kato == ("D1",)
                and sub.faces[0].vertices == ((Fraction(1, 2),),))

    check("ks: minimum 2 attained exactly at v_D1", c_ks)

    def c_residue():
        pair = fx.strict_inclusion_pair()
        res = residue(fx.strict_inclusion_form(), pair, {"D4"})
        num = res.numerators[0]
        return (sorted(res.dlog) == ["D3"] and len(num.numerator) == 1
                and num.numerator[0].exps == (2, 2)
                and abs(num.numerator[0].coeff) == 2)

    check("residue along D4 is 2a T2^2 T3^2 dlog T3 (a = 1, up to the unit)", c_residue)

    def c_residue_ks():
        pair = fx.strict_inclusion_pair()
        tracep = pair.trace_pair({"D4"})
        res = residue(fx.strict_inclusion_form(), pair, {"D4"})
        sub = ks_skeleton(tracep, res)
        from .weights import face_slice_polytope

        want = {k: set(face_slice_polytope(tracep, k, tracep.pi_vector(k))[0])
                for k in tracep.kato_fan().points if k}
        got = {f.kato: set(f.vertices) for f in sub.faces}
        return got == want

    check("ks of the residue is the whole D4-trace skeleton", c_residue_ks)

    def c_toric_essential():
        from .weights import toric_essential_skeleton

        fan = fan_p2()
        sub = toric_essential_skeleton(fan)
        return len(sub.faces) == len(kato_fan_toric(fan))

    check("toric essential skeleton is the whole skeleton", c_toric_essential)

    def c_slice_circle():
        pair = fx.dwork_pair()
        sc = slice_dvf(pair, essential_skeleton(pair, []))
        prof = homology(sc.to_simplicial())
        return prof == sphere_profile(1)

    check("Dwork slice at <b,alpha>=1 is a circle", c_slice_circle)

    def c_gauss():
        rec = gauss_weight_identity(1, 1, 2, 1)
        return (rec["log_r"] == -2 and rec["log_norm_trivial"] == -2
                and rec["log_norm_discrete"] == -4 and rec["identity_holds"])

    check("gauss exponents at (1,1,2,1) are (-2,-2,-4), identity holds", c_gauss)

    check("link of P2 is a circle", lambda: homology(link_complex(fan_p2())) == sphere_profile(1))

    def c_thm_e():
        return character_variety_homology("gl", 2) == sphere_profile(3)

    check("gl n=2 has the S^3 homology profile", c_thm_e)

    def c_thm_f():
        return character_variety_homology("sl", 2) == sphere_profile(1)

    check("sl n=2 has the S^1 homology profile", c_thm_f)

    def c_tate_cases():
        a = tate_strata(2, (1, 1))
        b = tate_strata(2, (1, -1))
        c = tate_strata(2, (-1, -1))
        neg_ok = all(s["contained"] == (len(s["J"]) - 2 in (0, 1)) for s in c["strata"])
        return (a["case"] == "generic" and b["case"] == "single_divisor"
                and b["local_model"] == "Gm^(n-1) x A1" and neg_ok)

    check("tate cases: |a|>0 generic, |a|=0 single divisor, |a|<0 table", c_tate_cases)

    return checks


def cmd_fixtures(args):
    results = []
    failed = 0
    for name, fn in _fixture_checks():
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failure with diagnostics
            ok = False
            name = f"{name} [{type(exc).__name__}: {exc}]"
        results.append({"check": name, "status": "pass" if ok else "FAIL"})
        if not ok:
            failed += 1
        print(("PASS  " if ok else "FAIL  ") + name)
    _emit({"schema": "1", "command": "fixtures",
           "results": results, "failed": failed}, args)
    if failed:
        raise SystemExitWithCode(3, f"{failed} fixture check(s) failed")


# --------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="logskel",
        description="skeletons of log-regular pairs, weight functions, and the "
                    "dual-complex pipeline (exact arithmetic)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        p.add_argument("-o", "--output", help="write the JSON report here "
                       "(relative paths resolve under $LOGSKEL_OUTPUT_DIR)")
        return p

    p = add("skeleton", cmd_skeleton, help="Kato fan and faces of a pair or fan")
    p.add_argument("--pair")
    p.add_argument("--fan")

    p = add("closure", cmd_closure, help="classify extended points into strata")
    p.add_argument("--pair")
    p.add_argument("--fan")
    p.add_argument("--points", required=True)

    p = add("weight", cmd_weight, help="weight values at listed points")
    p.add_argument("--pair", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--points", required=True)

    p = add("ks", cmd_ks, help="Kontsevich-Soibelman skeleton of a form")
    p.add_argument("--pair", required=True)
    p.add_argument("--form", required=True)

    p = add("essential", cmd_essential, help="essential skeleton of a pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--form", action="append", help="repeatable form file")

    p = add("slice", cmd_slice, help="normalized slice of the skeleton")
    p.add_argument("--pair", required=True)
    p.add_argument("--essential", action="store_true",
                   help="slice the essential skeleton instead of the whole skeleton")

    p = add("residue", cmd_residue, help="residue of a form along a stratum")
    p.add_argument("--pair", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--stratum", nargs="+", required=True)
    p.add_argument("--ks", action="store_true", help="also minimize on the trace")

    p = add("dual-complex", cmd_dual_complex, help="dual complex of a pair or fan link")
    p.add_argument("--pair")
    p.add_argument("--fan")
    p.add_argument("--off", help="also write an OFF facet dump here")

    p = add("homology", cmd_homology, help="integral homology of a complex")
    p.add_argument("--complex", required=True)

    p = add("character-variety", cmd_character_variety,
            help="sphere profile of the genus-one character variety boundary")
    p.add_argument("--group", choices=("gl", "sl"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("tate", cmd_tate, help="special-fibre strata of the Tate-curve kernel")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, nargs="+", required=True)

    p = add("gauss", cmd_gauss, help="Gauss-extension exponent identity")
    p.add_argument("--c", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("sphere-check", cmd_sphere_check, help="numeric symmetric-quotient map checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)

    add("fixtures", cmd_fixtures, help="run the bundled paper regression suite")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except SystemExitWithCode as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except VALIDATION_ERRORS as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
