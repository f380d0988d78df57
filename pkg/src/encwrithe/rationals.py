"""Exact rational scalars: parsing, Gaussian rationals, interval arithmetic.

Everything in the certified pipeline is built on fractions.Fraction.
Intervals carry rational endpoints and are used only to *separate* exact
quantities from zero, never to decide equality; equality decisions are
always made symbolically upstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidInput

Rat = Union[int, Fraction]


def rat(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise InvalidInput(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Serialize a Fraction losslessly ('p/q' or plain integer)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction | int) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class QI:
    """Gaussian rational a + b*i with exact components."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "QI":
        return QI(rat(re), rat(im))

    def __add__(self, other: "QI") -> "QI":
        other = _as_qi(other)
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "QI") -> "QI":
        other = _as_qi(other)
        return QI(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "QI":
        return _as_qi(other) - self

    def __mul__(self, other: "QI") -> "QI":
        other = _as_qi(other)
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "QI") -> "QI":
        other = _as_qi(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by complex zero")
        return self * QI(other.re / n, -other.im / n)

    def __neg__(self) -> "QI":
        return QI(-self.re, -self.im)

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self) -> str:
        return f"QI({rat_str(self.re)}, {rat_str(self.im)})"


I = QI(Fraction(0), Fraction(1))


def _as_qi(value) -> QI:
    if isinstance(value, QI):
        return value
    return QI(rat(value), Fraction(0))


def isqrt_floor(n: int) -> int:
    return math.isqrt(n)


def sqrt_lower(x: Fraction, prec: int = 0) -> Fraction:
    """Rational lower bound of sqrt(x), x >= 0; enclosure width <= 1/(q*2^prec)."""
    if x < 0:
        raise InvalidInput("sqrt of negative rational")
    p, q = x.numerator, x.denominator
    m = 1 << prec
    # sqrt(p/q) = sqrt(p*q*m^2) / (q*m)
    return Fraction(math.isqrt(p * q * m * m), q * m)


def sqrt_upper(x: Fraction, prec: int = 0) -> Fraction:
    """Rational upper bound of sqrt(x), x >= 0."""
    if x < 0:
        raise InvalidInput("sqrt of negative rational")
    p, q = x.numerator, x.denominator
    m = 1 << prec
    r = math.isqrt(p * q * m * m)
    if r * r == p * q * m * m:
        return Fraction(r, q * m)
    return Fraction(r + 1, q * m)


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidInput(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "Interval":
        x = rat(x)
        return Interval(x, x)

    @staticmethod
    def of(lo, hi) -> "Interval":
        return Interval(rat(lo), rat(hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "Interval") -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: "Interval") -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other) -> "Interval":
        return _as_interval(other) - self

    def __mul__(self, other: "Interval") -> "Interval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def disjoint(self, other: "Interval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def definite_sign(self) -> int:
        """Sign if the interval excludes zero, else 0 (undecided)."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def sqrt(self, prec: int = 0) -> "Interval":
        """Enclosure of sqrt over a nonnegative interval."""
        lo = self.lo if self.lo > 0 else Fraction(0)
        return Interval(sqrt_lower(lo, prec), sqrt_upper(self.hi, prec))

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _as_interval(value) -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(rat(value))


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in the closed interval [lo, hi].

    Stern-Brocot walk; used to sniff out exact rational values hiding in
    isolating intervals (sound because any candidate is verified by exact
    evaluation before it is believed).
    """
    if lo > hi:
        raise InvalidInput("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_in_interval(-hi, -lo)
    # now 0 < lo <= hi
    n = lo.numerator // lo.denominator  # floor(lo)
    if n + 1 <= hi:
        return Fraction(n if n >= lo else n + 1)
    frac_lo = lo - n
    if frac_lo == 0:
        return Fraction(n)
    inner = simplest_in_interval(1 / (hi - n), 1 / frac_lo)
    return n + 1 / inner
