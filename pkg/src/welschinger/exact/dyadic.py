"""Outward-rounded dyadic interval arithmetic with bounded mantissas.

Values are intervals [a*2^e, b*2^e] with integer mantissas a <= b kept below
a working precision, so arithmetic on thousands-of-bits exact coefficients
degrades gracefully into fast low-precision enclosures.  Used as the first,
cheap stage of certified sign evaluation; exactness always comes from the
caller's fallback, never from here.
"""

from __future__ import annotations

from fractions import Fraction


class Dy:
    """Interval [a*2^e, b*2^e]."""

    __slots__ = ("a", "b", "e")

    def __init__(self, a, b, e):
        self.a = a
        self.b = b
        self.e = e

    def __repr__(self):
        return f"Dy({float(self.a) * 2.0 ** self.e}, {float(self.b) * 2.0 ** self.e})"


def _round(a, b, e, prec):
    m = max(a.bit_length(), b.bit_length())
    if m <= 2 * prec:
        return Dy(a, b, e)
    s = m - prec
    half = (1 << s) - 1
    # floor for the lower end, ceiling for the upper
    return Dy(a >> s, (b + half) >> s, e + s)


def dy_from_int(c, prec) -> Dy:
    return _round(c, c, 0, prec)


def dy_from_fraction(fr: Fraction, prec) -> Dy:
    num, den = fr.numerator, fr.denominator
    if den == 1:
        return dy_from_int(num, prec)
    shift = den.bit_length() + prec
    lo = (num << shift) // den
    return _round(lo, lo + 1, -shift, prec)


def dy_add(x: Dy, y: Dy, prec) -> Dy:
    if x.e == y.e:
        return _round(x.a + y.a, x.b + y.b, x.e, prec)
    if x.e < y.e:
        x, y = y, x
    s = x.e - y.e
    return _round((x.a << s) + y.a, (x.b << s) + y.b, y.e, prec)


def dy_mul(x: Dy, y: Dy, prec) -> Dy:
    p1, p2, p3, p4 = x.a * y.a, x.a * y.b, x.b * y.a, x.b * y.b
    return _round(min(p1, p2, p3, p4), max(p1, p2, p3, p4), x.e + y.e, prec)


def dy_sign(x: Dy):
    """1 or -1 if the interval excludes zero, else None."""
    if x.a > 0:
        return 1
    if x.b < 0:
        return -1
    return None


def dy_div(x: Dy, y: Dy, prec) -> Dy:
    """x / y for y bounded away from zero (caller certifies)."""
    if y.a <= 0 <= y.b:
        raise ZeroDivisionError("interval denominator straddles zero")
    shift = prec + max(x.a.bit_length(), x.b.bit_length()) + 4
    cands = []
    for n in (x.a, x.b):
        for d in (y.a, y.b):
            cands.append((n << shift) // d)
    return _round(min(cands), max(cands) + 1, x.e - y.e - shift, prec)


def dy_poly(coeffs, prec):
    """Convert an integer coefficient list to cached dyadic intervals."""
    return [dy_from_int(c, prec) for c in coeffs]


def dy_horner(dcoeffs, x: Dy, prec) -> Dy:
    acc = Dy(0, 0, 0)
    for c in reversed(dcoeffs):
        acc = dy_add(dy_mul(acc, x, prec), c, prec)
    return acc


def dy_interval(lo: Fraction, hi: Fraction, prec) -> Dy:
    dlo = dy_from_fraction(lo, prec)
    dhi = dy_from_fraction(hi, prec)
    if dlo.e == dhi.e:
        return Dy(dlo.a, dhi.b, dlo.e)
    if dlo.e < dhi.e:
        return Dy(dlo.a, dhi.b << (dhi.e - dlo.e), dlo.e)
    return Dy(dlo.a << (dlo.e - dhi.e), dhi.b, dhi.e)
