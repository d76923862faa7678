"""Extended nonnegative rationals: exact Fraction values plus a +infinity element.

Weight vectors take values in Q>=0 together with +inf; +inf absorbs addition
and dominates min.  The convention 0 * inf = 0 is used throughout, matching
monoid homomorphisms into the extended half-line.
"""

from __future__ import annotations

from fractions import Fraction


class _Infinity:
    """Singleton +infinity compatible with Fraction comparisons."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("logskel-inf")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("negated infinity is not an extended weight")


INF = _Infinity()

ExtRat = object  # Fraction | INF; alias for documentation only


def is_inf(x) -> bool:
    return x is INF


def q(value) -> Fraction:
    """Coerce int/str/Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_ext(value):
    """Parse "p/q" or "inf" (also accepts int/Fraction)."""
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    return q(value)


def fmt(value) -> str:
    """Format a Fraction or INF as "p/q" / "p" / "inf"."""
    if value is INF:
        return "inf"
    f = q(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def xadd(a, b):
    """Extended addition; inf absorbs."""
    if a is INF or b is INF:
        return INF
    return a + b


def xmin(values):
    """Minimum of extended rationals; min over the empty list is inf."""
    best = INF
    for v in values:
        if v is INF:
            continue
        if best is INF or v < best:
            best = v
    return best


def xscale(c: Fraction, a):
    """c * a with c a finite rational >= 0 and a extended; 0 * inf = 0."""
    if a is INF:
        if c == 0:
            return Fraction(0)
        if c < 0:
            raise ArithmeticError("negative multiple of infinity")
        return INF
    return c * a


def xdot(exponents, weights):
    """<gamma, alpha> with integer exponents and extended weights.

    Zero exponents contribute 0 even against infinite weights; a negative
    exponent against an infinite weight is rejected (the function is not
    regular at such a point).
    """
    total = Fraction(0)
    for g, a in zip(exponents, weights):
        if g == 0:
            continue
        if a is INF:
            if g < 0:
                raise ArithmeticError("negative exponent at an infinite weight")
            return INF
        total += g * a
    return total
