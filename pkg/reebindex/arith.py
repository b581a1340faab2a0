"""
Exact and certified arithmetic
==============================

Angles, mean indices and the fractions built from them are exact
:class:`fractions.Fraction` values whenever possible. Values that are only known
numerically (eigenphases of an exponential of a symmetric matrix, JSON floats
marked approximate) are :class:`ApproxReal` objects: lazily composed expressions
that can be re-evaluated at any mpmath precision as a centre with an error
radius. Every decision (floor, sign, integrality) on an ApproxReal doubles the
working precision until it is decided or the precision cap is reached, in which
case a :class:`reebindex.exceptions.PrecisionError` is raised instead of
guessing.
"""
#===============================================================================
import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
#===============================================================================
import mpmath
#===============================================================================
from reebindex.exceptions import PrecisionError, StructuralError
#===============================================================================
DEFAULT_DPS = 30
DEFAULT_CAP_DPS = 480
_precision = {'cap': DEFAULT_CAP_DPS}
#===============================================================================
def gcd(a, b):
    return math.gcd(int(a), int(b))
#===============================================================================
def lcm(*values):
    """
    Least common multiple of positive integers (1 for no arguments).
    """
    def lcm2(a, b):
        return a*b//math.gcd(a, b)
    return reduce(lcm2, (int(v) for v in values), 1)
#===============================================================================
def to_fraction(value):
    """
    Convert *value* to an exact Fraction.

    Accepts int, Fraction, numbers.Rational (e.g. sympy Rational) and strings
    'p/q' or 'p'. Floats are refused, use :meth:`ApproxReal.from_float` for them.

    :raise: StructuralError
    """
    if isinstance(value, bool):
        raise StructuralError(f"Cannot interpret {value!r} as a rational.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as e:
            raise StructuralError(f"Cannot parse rational '{value}'.") from e
    raise StructuralError(f"Cannot interpret {value!r} as an exact rational.")
#===============================================================================
def rationalize(x, max_denominator=1000, tolerance=1e-9):
    """
    Best rational approximation of the float *x* with denominator at most
    *max_denominator*, or None if it is further than *tolerance* from *x*.
    """
    f = Fraction(x).limit_denominator(max_denominator)
    if abs(float(f) - x) <= tolerance:
        return f
    return None
#===============================================================================
class Undecided(Exception):
    """Internal: the current precision does not decide a comparison."""
#===============================================================================
class ApproxReal:
    """
    A real number known through an evaluation function.

    :param evaluate: callable(dps) -> (centre, radius), both mpmath.mpf, such
        that the true value lies in [centre - radius, centre + radius].
    :param str label: human readable description, used in error messages.
    """
    def __init__(self, evaluate, label='approximate value'):
        self._evaluate = evaluate
        self.label = label

    def evaluate(self, dps):
        with mpmath.workdps(dps):
            c, r = self._evaluate(dps)
            # outward padding for the rounding of the last operation
            r = abs(r) + abs(c)*mpmath.mpf(10)**(-dps + 2)
            return c, r

    @classmethod
    def from_float(cls, x, radius=None, label=None):
        """
        A float with a declared uncertainty; refinement cannot shrink it.
        """
        x = float(x)
        if radius is None:
            radius = max(abs(x), 1.0)*1e-12

        def evaluate(dps):
            return mpmath.mpf(x), mpmath.mpf(radius)
        return cls(evaluate, label or f"{x!r}±{radius:.1e}")

    def __float__(self):
        return float(self.evaluate(DEFAULT_DPS)[0])

    def __repr__(self):
        return f"ApproxReal({self.label})"
    #---------------------------------------------------------------------------
    def _combine(self, other, op, label):
        a = self
        if isinstance(other, ApproxReal):
            b = other
        else:
            q = to_fraction(other)

            def const(dps):
                return mpmath.mpf(q.numerator)/q.denominator, mpmath.mpf(0)
            b = ApproxReal(const, str(q))

        def evaluate(dps):
            ca, ra = a.evaluate(dps)
            cb, rb = b.evaluate(dps)
            return op(ca, ra, cb, rb)
        return ApproxReal(evaluate, label.format(a.label, b.label))

    def __add__(self, other):
        return self._combine(other, lambda ca, ra, cb, rb: (ca + cb, ra + rb), "({}+{})")

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda ca, ra, cb, rb: (ca - cb, ra + rb), "({}-{})")

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        a = self

        def evaluate(dps):
            c, r = a.evaluate(dps)
            return -c, r
        return ApproxReal(evaluate, f"-{self.label}")

    def __mul__(self, other):
        def op(ca, ra, cb, rb):
            return ca*cb, abs(ca)*rb + abs(cb)*ra + ra*rb
        return self._combine(other, op, "{}*{}")

    __rmul__ = __mul__

    def __truediv__(self, other):
        def op(ca, ra, cb, rb):
            if abs(cb) <= rb:
                raise Undecided()
            c = ca/cb
            return c, (ra + abs(c)*rb)/(abs(cb) - rb)
        return self._combine(other, op, "{}/{}")

    def __rtruediv__(self, other):
        q = to_fraction(other)
        a = self

        def evaluate(dps):
            c, r = a.evaluate(dps)
            if abs(c) <= r:
                raise Undecided()
            v = (mpmath.mpf(q.numerator)/q.denominator)/c
            return v, abs(v)*r/(abs(c) - r)
        return ApproxReal(evaluate, f"{q}/{self.label}")
#===============================================================================
def set_precision_cap(dps):
    """
    Set the precision (decimal digits) at which decisions on approximate
    values give up.
    """
    if dps < DEFAULT_DPS:
        raise StructuralError(f"Precision cap must be at least {DEFAULT_DPS}, got {dps}.")
    _precision['cap'] = int(dps)
#===============================================================================
def is_exact(x):
    return not isinstance(x, ApproxReal)
#===============================================================================
def _decide(x, decision, what, dps=DEFAULT_DPS, cap=None):
    """
    Evaluate *decision(lo, hi)* on the enclosure of *x* at increasing precision.
    """
    cap = _precision['cap'] if cap is None else cap
    while True:
        try:
            c, r = x.evaluate(dps)
            return decision(c - r, c + r)
        except Undecided:
            if dps >= cap:
                raise PrecisionError(f"Cannot decide {what} of {x.label} at {dps} digits.")
            dps = min(2*dps, cap)
#===============================================================================
def floor(x, cap=None):
    """
    Exact floor of a Fraction/int, certified floor of an ApproxReal.
    """
    if is_exact(x):
        return math.floor(x)

    def decision(lo, hi):
        a, b = int(mpmath.floor(lo)), int(mpmath.floor(hi))
        if a != b:
            raise Undecided()
        return a
    return _decide(x, decision, 'floor', cap=cap)
#===============================================================================
def ceil(x, cap=None):
    if is_exact(x):
        return math.ceil(x)
    return -floor(-x, cap=cap)
#===============================================================================
def sign(x, cap=None):
    """
    Sign of x as -1, 0 or 1. A zero sign is only ever returned for exact values.
    """
    if is_exact(x):
        return (x > 0) - (x < 0)

    def decision(lo, hi):
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        raise Undecided()
    return _decide(x, decision, 'sign', cap=cap)
#===============================================================================
def compare(x, y, cap=None):
    """
    Three way comparison, certified for approximate operands.
    """
    if is_exact(x) and is_exact(y):
        return (x > y) - (x < y)
    return sign(x - y, cap=cap)
#===============================================================================
def is_integer(x, cap=None):
    """
    True iff x is an integer. For an ApproxReal only False can be certified.
    """
    if is_exact(x):
        return Fraction(x).denominator == 1

    def decision(lo, hi):
        if mpmath.floor(lo) == mpmath.floor(hi) and mpmath.floor(hi) != hi \
                and mpmath.floor(lo) != lo:
            return False
        raise Undecided()
    return _decide(x, decision, 'integrality', cap=cap)
#===============================================================================
def frac(x, cap=None):
    """
    Fractional part x - floor(x).
    """
    return x - floor(x, cap=cap)
#===============================================================================
def distance_to_integers(x, cap=None):
    """
    min{frac(x), 1 - frac(x)}.
    """
    f = frac(x, cap=cap)
    g = 1 - f
    return f if compare(f, g, cap=cap) <= 0 else g
#===============================================================================
def to_str(x):
    """
    Canonical string: 'p/q' (or 'p') for exact values, a decimal for
    approximate ones.
    """
    if is_exact(x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return mpmath.nstr(x.evaluate(DEFAULT_DPS)[0], 17)
#===============================================================================
