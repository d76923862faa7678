"""Bundled fixtures: the worked examples the regression suite pins down.

Builders return fresh objects; expected values live next to them so the CLI
``fixtures`` command and the acceptance tests share one source of truth.
"""

from __future__ import annotations

from fractions import Fraction

from .logstructure import BoundaryComponent, LogChart, PairDescription
from .valuations import LaurentRational, SkeletonPoint
from .weights import PluriForm


def coordinate_eq(axis: int, arity: int) -> LaurentRational:
    return LaurentRational.coordinate(axis, arity)


def strict_inclusion_pair() -> PairDescription:
    """The degeneration pi = T1^2 T2 T3 with a horizontal section T1 = 1.

    Components D1, D2, D3 are vertical with multiplicities (2, 1, 1); D4 is
    the horizontal divisor cut by T1 - 1 (a unit constant term keeps its
    valuation zero on the vertical faces).  Chart 0 uses coordinates
    (T1, T2, T3); chart 1 recenters along D4 with S = T1 - 1.
    """
    comps = {
        "D1": BoundaryComponent("D1", Fraction(1), 2),
        "D2": BoundaryComponent("D2", Fraction(1), 1),
        "D3": BoundaryComponent("D3", Fraction(1), 1),
        "D4": BoundaryComponent("D4", Fraction(1), 0),
    }
    chart0 = LogChart(
        coordinates=("T1", "T2", "T3"),
        cut={"T1": "D1", "T2": "D2", "T3": "D3"},
        equations={
            "D1": coordinate_eq(0, 3),
            "D2": coordinate_eq(1, 3),
            "D3": coordinate_eq(2, 3),
            # T1 - 1 (the fixture takes a = 1)
            "D4": LaurentRational([((1, 0, 0), 0, 1), ((0, 0, 0), 0, -1)]),
        },
        relative_dimension=2,
    )
    chart1 = LogChart(
        coordinates=("S", "T2", "T3"),
        cut={"S": "D4", "T2": "D2", "T3": "D3"},
        equations={
            "D4": coordinate_eq(0, 3),
            "D2": coordinate_eq(1, 3),
            "D3": coordinate_eq(2, 3),
            # D1 is cut by T1 = S + 1, a unit along the D4 strata
            "D1": LaurentRational([((1, 0, 0), 0, 1), ((0, 0, 0), 0, 1)]),
        },
        relative_dimension=2,
    )
    strata = [
        frozenset(), frozenset({"D1"}), frozenset({"D2"}), frozenset({"D3"}),
        frozenset({"D4"}),
        frozenset({"D1", "D2"}), frozenset({"D1", "D3"}), frozenset({"D2", "D3"}),
        frozenset({"D1", "D2", "D3"}),
        frozenset({"D2", "D4"}), frozenset({"D3", "D4"}),
        frozenset({"D2", "D3", "D4"}),
    ]
    return PairDescription(mode="dvf", components=comps, charts=[chart0, chart1],
                           strata=strata)


def strict_inclusion_form() -> PluriForm:
    """eta = (T1^2 T2^2 T3^2 / (T1 - 1)) dlog T2 ^ dlog T3.

    On the D4 chart the same form reads 2 (S + 1) T2^2 T3^2 dlog S ^ dlog T3:
    the hypersurface relation trades dlog T2 for dlog S up to the unit 2, so
    that chart carries its own dlog pattern {D4, D3}.
    """
    chart0_num = LaurentRational(
        [((2, 2, 2), 0, 1)],
        [((1, 0, 0), 0, 1), ((0, 0, 0), 0, -1)],
    )
    chart1_num = LaurentRational(
        [((1, 2, 2), 0, 2), ((0, 2, 2), 0, 2)],
    )
    return PluriForm(m=1, dlog=frozenset({"D2", "D3"}),
                     numerators={0: chart0_num, 1: chart1_num},
                     chart_dlog={1: frozenset({"D4", "D3"})})


STRICT_INCLUSION_DIVISORIAL = {
    "D1": SkeletonPoint.make(("D1",), [Fraction(1, 2)], mode="dvf"),
    "D2": SkeletonPoint.make(("D2",), [Fraction(1)], mode="dvf"),
    "D3": SkeletonPoint.make(("D3",), [Fraction(1)], mode="dvf"),
}

STRICT_INCLUSION_WEIGHTS = {"D1": Fraction(2), "D2": Fraction(3), "D3": Fraction(3)}

STRICT_INCLUSION_RESIDUE_NUMERATOR = LaurentRational([((2, 2), 0, 2)])


def dwork_pair() -> PairDescription:
    """Three corner charts of the degenerating plane cubic x y z = pi.

    The special fibre is a triangle of lines; each corner chart carries two
    vertical components with multiplicity one.  The total-space pair is
    logCY with reduced boundary, so its essential skeleton is the whole
    skeleton: the cone over the triangle.
    """
    comps = {k: BoundaryComponent(k, Fraction(1), 1) for k in ("E0", "E1", "E2")}
    names = ["E0", "E1", "E2"]
    charts = []
    for i in range(3):
        a, b = names[i], names[(i + 1) % 3]
        charts.append(LogChart(
            coordinates=(f"u{i}", f"v{i}"),
            cut={f"u{i}": a, f"v{i}": b},
            equations={a: coordinate_eq(0, 2), b: coordinate_eq(1, 2)},
            relative_dimension=1,
        ))
    strata = [frozenset(), frozenset({"E0"}), frozenset({"E1"}), frozenset({"E2"}),
              frozenset({"E0", "E1"}), frozenset({"E1", "E2"}), frozenset({"E0", "E2"})]
    return PairDescription(mode="dvf", components=comps, charts=charts,
                           strata=strata, logcy=True)


def a2_pair(coefficients=(1, 1), logcy=False) -> PairDescription:
    """The affine plane with its two coordinate lines as boundary."""
    a1, a2 = (Fraction(x) for x in coefficients)
    comps = {
        "B1": BoundaryComponent("B1", a1, 0),
        "B2": BoundaryComponent("B2", a2, 0),
    }
    chart = LogChart(
        coordinates=("z1", "z2"),
        cut={"z1": "B1", "z2": "B2"},
        equations={"B1": coordinate_eq(0, 2), "B2": coordinate_eq(1, 2)},
        relative_dimension=2,
    )
    strata = [frozenset(), frozenset({"B1"}), frozenset({"B2"}), frozenset({"B1", "B2"})]
    return PairDescription(mode="trivial", components=comps, charts=[chart],
                           strata=strata, logcy=logcy)


def a2_form(numerator_terms, dlog=("B1", "B2"), m=1) -> PluriForm:
    return PluriForm(m=m, dlog=frozenset(dlog),
                     numerators={0: LaurentRational(numerator_terms)})


def tate_alpha_sweep(n: int = 2, bound: int = 3):
    """All alpha vectors for the appendix sweep, |alpha_i| <= bound."""
    import itertools

    return [alpha for alpha in itertools.product(range(-bound, bound + 1), repeat=n)]
