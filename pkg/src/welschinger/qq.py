"""Rational scalars: parsing, formatting, Gaussian rationals, rational intervals.

All exact arithmetic in the package bottoms out in `fractions.Fraction`
(arbitrary-precision rationals with normalized sign and gcd).  This module
adds the "p/q" wire format used by the CLI, complex rationals for imaginary
centers and Puiseux coefficients, and closed-interval arithmetic used by the
certified sign routines.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce ints, "p/q" strings, and Fractions to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


def rat_str(value: Fraction) -> str:
    """Render a rational in the canonical "p/q" wire format ("p" if integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class QQi:
    """Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = rat(re) if not isinstance(re, Fraction) else re
        self.im = rat(im) if not isinstance(im, Fraction) else im

    @staticmethod
    def of(value) -> "QQi":
        if isinstance(value, QQi):
            return value
        return QQi(rat(value))

    def __add__(self, other):
        other = QQi.of(other)
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = QQi.of(other)
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return QQi.of(other) - self

    def __mul__(self, other):
        other = QQi.of(other)
        return QQi(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QQi.of(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * other.re + self.im * other.im) / n,
                   (self.im * other.re - self.re * other.im) / n)

    def __rtruediv__(self, other):
        return QQi.of(other) / self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __pow__(self, n: int):
        out = QQi(1)
        base = self
        if n < 0:
            base = QQi(1) / base
            n = -n
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QQi.of(other)
        if not isinstance(other, QQi):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if self.im == 0:
            return rat_str(self.re)
        return f"({rat_str(self.re)}{'+' if self.im >= 0 else '-'}{rat_str(abs(self.im))}i)"


class RatInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = rat(lo) if not isinstance(lo, Fraction) else lo
        self.hi = rat(hi) if not isinstance(hi, Fraction) else hi
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def point(value) -> "RatInterval":
        v = rat(value)
        return RatInterval(v, v)

    def __add__(self, other):
        other = _as_interval(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self):
        """Sign if determined (-1 or 1), else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def mag(self) -> Fraction:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def _as_interval(value):
    if isinstance(value, RatInterval):
        return value
    return RatInterval.point(value)


def interval_eval(coeffs, box: RatInterval) -> RatInterval:
    """Horner evaluation of a polynomial (low-to-high coefficients) on an interval."""
    acc = RatInterval.point(0)
    for c in reversed(coeffs):
        acc = acc * box + RatInterval.point(c)
    return acc
