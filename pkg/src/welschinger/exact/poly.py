"""Univariate and bivariate polynomials over exact rationals.

``UniPoly`` is dense with Fraction coefficients, low degree first.
``BiPoly`` is sparse, a map (i, j) -> coefficient, where coefficients are
Fractions or Gaussian rationals.  Heavy elimination work (resultants,
subresultants, gcds) clears denominators and runs in the integer kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from ..errors import InconsistentSamples
from ..qq import QQi, rat
from . import intkernel as ik


def _lcm(a, b):
    return a // _igcd(a, b) * b


class UniPoly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rat(c) if not isinstance(c, Fraction) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def variable() -> "UniPoly":
        return UniPoly([0, 1])

    @staticmethod
    def from_zz(f, den=1) -> "UniPoly":
        return UniPoly([Fraction(c, den) for c in f])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)])

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        out = [Fraction(0)] * (dq + 1)
        lo = other.lc()
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lo
            out[k] = q
            if q:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= q * b
        return UniPoly(out), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        if isinstance(x, UniPoly):
            acc = UniPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + UniPoly.const(c)
            return acc
        x = rat(x) if not isinstance(x, Fraction) else x
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def diff(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lo = self.lc()
        return UniPoly([c / lo for c in self.coeffs])

    def to_zz(self):
        """Clear denominators: returns (integer coefficient list, denominator)."""
        den = 1
        for c in self.coeffs:
            den = _lcm(den, c.denominator)
        return [int(c * den) for c in self.coeffs], den

    def to_zz_primitive(self):
        """Primitive integer model (positive content removed, sign kept)."""
        f, _ = self.to_zz()
        return ik.zz_primitive(f)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        g = ik.zz_gcd(self.to_zz_primitive(), _coerce(other).to_zz_primitive())
        return UniPoly.from_zz(g)

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 0:
            return self
        return UniPoly.from_zz(ik.zz_squarefree_part(self.to_zz_primitive()))

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"


def _coerce(v) -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    return UniPoly([v])


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant of two univariate rational polynomials."""
    f, g = _coerce(f), _coerce(g)
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial")
    fz, fd = f.to_zz()
    gz, gd = g.to_zz()
    r = ik.zz_resultant(fz, gz)
    return Fraction(r, fd ** g.degree * gd ** f.degree)


class BiPoly:
    """Sparse bivariate polynomial; coefficients Fraction or QQi."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, (Fraction, QQi)):
                    c = rat(c)
                if c:
                    cur = self.terms.get((i, j))
                    s = c if cur is None else cur + c
                    if s:
                        self.terms[(i, j)] = s
                    elif cur is not None:
                        del self.terms[(i, j)]

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def x() -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @staticmethod
    def y() -> "BiPoly":
        return BiPoly({(0, 1): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def support(self):
        return set(self.terms)

    def __add__(self, other):
        other = _bicoerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return _bi_raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _bi_raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_bicoerce(other))

    def __rsub__(self, other):
        return _bicoerce(other) - self

    def __mul__(self, other):
        other = _bicoerce(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + a * b
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return _bi_raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QQi)):
            other = _bicoerce(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def diff_x(self) -> "BiPoly":
        return _bi_raw({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return _bi_raw({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        acc = None
        for (i, j), c in self.terms.items():
            t = c * x ** i * y ** j
            acc = t if acc is None else acc + t
        if acc is None:
            return Fraction(0)
        return acc

    def eval_series(self, xs, ys, order):
        """Compose with truncated power series (lists of coefficients, t^0 first)."""
        from .series import series_mul, series_pow, series_add, series_scale
        acc = [Fraction(0)] * order
        for (i, j), c in sorted(self.terms.items()):
            term = series_mul(series_pow(xs, i, order), series_pow(ys, j, order), order)
            acc = series_add(acc, series_scale(term, c), order)
        return acc

    def as_unipoly_in_x(self):
        """Coefficient list (UniPoly in y) ordered by x-power, low first."""
        dx = self.degree_x()
        cols = [dict() for _ in range(dx + 1)]
        for (i, j), c in self.terms.items():
            cols[i][j] = c
        out = []
        for col in cols:
            dy = max(col, default=-1)
            out.append(UniPoly([col.get(j, 0) for j in range(dy + 1)]))
        return out

    def as_unipoly_in_y(self):
        return self.swap().as_unipoly_in_x()

    def swap(self) -> "BiPoly":
        return _bi_raw({(j, i): c for (i, j), c in self.terms.items()})

    def subs_x(self, value) -> UniPoly:
        """Substitute a rational for x; returns a UniPoly in y."""
        out = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * rat(value) ** i
        dy = max(out, default=-1)
        return UniPoly([out.get(j, 0) for j in range(dy + 1)])

    def subs_y(self, value) -> UniPoly:
        return self.swap().subs_x(value)

    def conjugate(self) -> "BiPoly":
        out = {}
        for k, c in self.terms.items():
            out[k] = c.conjugate() if isinstance(c, QQi) else c
        return _bi_raw(out)

    def real_imag(self):
        re, im = {}, {}
        for k, c in self.terms.items():
            if isinstance(c, QQi):
                if c.re:
                    re[k] = c.re
                if c.im:
                    im[k] = c.im
            else:
                re[k] = c
        return _bi_raw(re), _bi_raw(im)

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        parts = [f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items())]
        return "BiPoly(" + " + ".join(parts) + ")"


def _bi_raw(terms) -> BiPoly:
    p = BiPoly()
    p.terms = {k: c for k, c in terms.items() if c}
    return p


def _bicoerce(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    return BiPoly.const(v)


def _bipoly_to_zzx(p: BiPoly, outer: str):
    """Integer model of p as a polynomial in `outer` over Z[other]; (zzx, den)."""
    den = 1
    for c in p.terms.values():
        if isinstance(c, QQi):
            raise TypeError("integer elimination requires rational coefficients")
        den = _lcm(den, c.denominator)
    if outer == "x":
        do, di = p.degree_x(), p.degree_y()
        key = lambda i, j: (i, j)
    else:
        do, di = p.degree_y(), p.degree_x()
        key = lambda i, j: (j, i)
    f = [[0] * (di + 1) for _ in range(do + 1)]
    for (i, j), c in p.terms.items():
        o, n = key(i, j)
        f[o][n] = int(c * den)
    return ik.zzx_strip([ik.zz_strip(c) for c in f]), den


def resultant_bivariate(p: BiPoly, q: BiPoly, eliminate: str) -> UniPoly:
    """Resultant of two bivariate polynomials, eliminating "x" or "y".

    Returns an exact UniPoly in the surviving variable.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial")
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    pf, pd = _bipoly_to_zzx(p, eliminate)
    qf, qd = _bipoly_to_zzx(q, eliminate)
    r = ik.zzx_resultant(pf, qf)
    dp = len(pf) - 1
    dq = len(qf) - 1
    scale = Fraction(1, pd ** dq * qd ** dp)
    return UniPoly([Fraction(c) * scale for c in r])


def interpolate_consecutive_ints(values, start: int, bound: int) -> UniPoly:
    """Newton forward-difference interpolation at nodes start, start+1, ...

    All sample values must lie on a polynomial of degree <= bound; orders
    beyond the bound act as a consistency check (their differences must
    vanish), mirroring the inconsistency contract of `interpolate`.
    """
    vals = [int(v) if isinstance(v, int) else rat(v) for v in values]
    if len(vals) < bound + 1:
        raise ValueError("need at least bound+1 samples")
    level = list(vals)
    leads = [level[0]]
    for k in range(1, len(vals)):
        level = [b - a for a, b in zip(level, level[1:])]
        if k <= bound:
            leads.append(level[0])
        elif any(level):
            raise InconsistentSamples(
                f"order-{k} differences do not vanish for degree bound {bound}")
    acc = UniPoly()
    basis = UniPoly.const(1)
    fact = 1
    for k, lead in enumerate(leads):
        if k:
            fact *= k
            basis = basis * UniPoly([-(start + k - 1), 1])
        if lead:
            acc = acc + basis * UniPoly.const(Fraction(lead, fact))
    return acc


def interpolate(samples, bound: int) -> UniPoly:
    """Unique polynomial of degree <= bound through exact rational samples.

    Uses the first bound+1 samples to build the Lagrange interpolant and
    checks the remaining ones against it; raises InconsistentSamples if any
    sample disagrees or abscissae repeat.
    """
    pts = [(rat(a), rat(b)) for a, b in samples]
    if len({a for a, _ in pts}) != len(pts):
        raise ValueError("sample abscissae must be distinct")
    if len(pts) < bound + 1:
        raise ValueError("need at least bound+1 samples")
    head = pts[: bound + 1]
    acc = UniPoly()
    for i, (xi, yi) in enumerate(head):
        if yi == 0:
            continue
        num = UniPoly.const(yi)
        den = Fraction(1)
        for j, (xj, _) in enumerate(head):
            if j == i:
                continue
            num = num * UniPoly([-xj, 1])
            den *= xi - xj
        acc = acc + num * UniPoly.const(1 / den)
    for xk, yk in pts[bound + 1:]:
        if acc(xk) != yk:
            raise InconsistentSamples(
                f"sample at {xk} inconsistent with degree-{bound} interpolant")
    return acc
