"""Outward-rounded interval arithmetic on machine floats.

Every operation widens its result by one ulp on each side, so an Ival
computed from exact rational inputs is a true enclosure of the real value.
Used as an independent cross-check of the algebraic certificates wherever a
square root enters."""

import math
from fractions import Fraction

_INF = math.inf


def _down(x):
    return math.nextafter(x, -_INF)


def _up(x):
    return math.nextafter(x, _INF)


class Ival:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        if isinstance(lo, Fraction) or isinstance(hi, Fraction):
            raise TypeError("use Ival.from_fraction for exact rationals")
        if not lo <= hi:
            raise ValueError("inverted interval [%r, %r]" % (lo, hi))
        self.lo = float(lo)
        self.hi = float(hi)

    @classmethod
    def from_fraction(cls, fr):
        f = float(fr)
        lo = f if Fraction(f) <= fr else _down(f)
        hi = f if Fraction(f) >= fr else _up(f)
        return cls(lo, hi)

    @classmethod
    def from_number(cls, x):
        if isinstance(x, Ival):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_fraction(Fraction(x))
        return cls(x, x)

    def __repr__(self):
        return "Ival(%r, %r)" % (self.lo, self.hi)

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi

    def __add__(self, other):
        o = Ival.from_number(other)
        return Ival(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __neg__(self):
        return Ival(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-Ival.from_number(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = Ival.from_number(other)
        cands = (self.lo * o.lo, self.lo * o.hi,
                 self.hi * o.lo, self.hi * o.hi)
        return Ival(_down(min(cands)), _up(max(cands)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Ival.from_number(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        cands = (self.lo / o.lo, self.lo / o.hi,
                 self.hi / o.lo, self.hi / o.hi)
        return Ival(_down(min(cands)), _up(max(cands)))

    def __rtruediv__(self, other):
        return Ival.from_number(other) / self

    def sqrt(self):
        if self.lo < 0:
            raise ValueError("sqrt of an interval reaching below 0")
        return Ival(_down(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))


def poly_ival(upoly, x):
    """Enclosure of a UniPoly over an Ival argument, Horner with outward
    rounding and exact coefficient enclosures."""
    acc = Ival(0.0, 0.0)
    for c in reversed(upoly.coeffs):
        acc = acc * x + Ival.from_fraction(c)
    return acc
