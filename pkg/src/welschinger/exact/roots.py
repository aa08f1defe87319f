"""Certified real-root isolation and sign evaluation at real algebraic points.

Roots are isolated by Sturm bisection over exact rationals.  A real
algebraic number is a primitive squarefree integer polynomial together with
an open isolating interval whose endpoints are not roots.  Signs of
polynomial expressions at such points are decided by interval refinement,
with exact zero tests routed through gcds and resultants so refinement
always terminates.
"""

from __future__ import annotations

from fractions import Fraction

from ..qq import RatInterval, rat
from . import intkernel as ik
from .dyadic import dy_horner, dy_interval, dy_poly, dy_sign
from .poly import BiPoly, UniPoly, _bicoerce, interpolate


class AlgebraicReal:
    """A real root of a squarefree integer polynomial, isolated by an interval."""

    __slots__ = ("poly", "lo", "hi", "multiplicity", "_chain")

    def __init__(self, poly, lo, hi, multiplicity=1):
        self.poly = [int(c) for c in poly]
        self.lo = rat(lo)
        self.hi = rat(hi)
        self.multiplicity = multiplicity
        self._chain = None

    @staticmethod
    def from_rational(value) -> "AlgebraicReal":
        v = rat(value)
        w = Fraction(1, 2)
        return AlgebraicReal([-v.numerator, v.denominator], v - w, v + w)

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        self.refine_to(Fraction(1, 1 << 40))
        return float(self.midpoint)

    def rational_value(self):
        """The exact rational value if this number is rational, else None."""
        if len(self.poly) == 2:
            return Fraction(-self.poly[0], self.poly[1])
        return None

    def refine(self):
        """Halve the isolating interval (endpoints stay non-roots)."""
        p = self.poly
        mid = (self.lo + self.hi) / 2
        smid = ik.zz_sign_at(p, mid)
        if smid == 0:
            # mid is the root itself; shrink symmetrically around it.
            w = (self.hi - self.lo) / 8
            while ik.zz_sign_at(p, mid - w) == 0 or ik.zz_sign_at(p, mid + w) == 0:
                w /= 2
            self.lo, self.hi = mid - w, mid + w
            return
        if ik.zz_sign_at(p, self.lo) == smid:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width: Fraction):
        while self.hi - self.lo > width:
            self.refine()

    def sign_of(self, q) -> int:
        """Exact sign of a rational polynomial q evaluated at this point.

        Fast path: outward-rounded dyadic interval evaluation at escalating
        precision.  If the value refuses to leave zero, an exact zero test
        (reduction modulo the defining polynomial plus a gcd root count)
        settles it, after which refinement is guaranteed to terminate.
        """
        if isinstance(q, UniPoly):
            qz = q.to_zz_primitive()
        else:
            qz = ik.zz_primitive([int(c) for c in q])
        if not qz:
            return 0
        if len(qz) == 1:
            return 1 if qz[0] > 0 else -1
        s = self._dyadic_sign(qz, rounds=((64, 2), (256, 3)))
        if s is not None:
            return s
        # size-aware precision: evaluation near a root cancels down from the
        # coefficient magnitude, so match the working precision to it
        bits = max(abs(c).bit_length() for c in qz)
        s = self._dyadic_sign(qz, rounds=((bits + 256, 6),))
        if s is not None:
            return s
        if ik.zz_gcd_is_trivial(qz, self.poly):
            # certified nonzero: refine until the sign shows
            prec, budget = 2 * bits + 512, 16
            while True:
                s = self._dyadic_sign(qz, rounds=((prec, budget),))
                if s is not None:
                    return s
                prec *= 2
        if len(qz) >= len(self.poly):
            rem = UniPoly.from_zz(qz) % UniPoly.from_zz(self.poly)
            qz = rem.to_zz_primitive()
            if not qz:
                return 0
            if len(qz) == 1:
                return 1 if qz[0] > 0 else -1
        g = ik.zz_gcd(qz, self.poly)
        if len(g) > 1 and self._count_in_interval(g) > 0:
            return 0
        prec, budget = 512, 16
        while True:
            s = self._dyadic_sign(qz, rounds=((prec, budget),))
            if s is not None:
                return s
            prec *= 2
            budget *= 2

    def _dyadic_sign(self, qz, rounds):
        for prec, budget in rounds:
            dp = dy_poly(qz, prec)
            for _ in range(budget):
                s = dy_sign(dy_horner(dp, dy_interval(self.lo, self.hi, prec), prec))
                if s is not None:
                    return s
                self.refine()
        return None

    def is_zero_of(self, q) -> bool:
        return self.sign_of(q) == 0

    def _count_in_interval(self, g) -> int:
        chain = ik.zz_sturm_chain(g)
        lo, hi = self.lo, self.hi
        # endpoints of the isolating interval might be roots of g (not of poly);
        # nudge outward, which cannot add roots of poly.
        while ik.zz_sign_at(g, lo) == 0 or ik.zz_sign_at(g, hi) == 0:
            w = (hi - lo) / 4
            self.refine_to(w)
            lo, hi = self.lo, self.hi
        return ik.zz_count_roots(chain, lo, hi)

    def compare_rational(self, value) -> int:
        """-1, 0, 1 as this point is below / equal to / above a rational."""
        v = rat(value)
        s = self.sign_of([-v.numerator, v.denominator])
        return s

    def separate_from(self, other: "AlgebraicReal"):
        """Refine both numbers until their isolating intervals are disjoint."""
        if self is other:
            return
        while not (self.hi < other.lo or other.hi < self.lo):
            if self.sign_of(other.poly) == 0 and other.sign_of(self.poly) == 0:
                g = ik.zz_gcd(self.poly, other.poly)
                if len(g) > 1:
                    chain = ik.zz_sturm_chain(g)
                    lo = min(self.lo, other.lo)
                    hi = max(self.hi, other.hi)
                    if ik.zz_sign_at(g, lo) and ik.zz_sign_at(g, hi) and \
                            ik.zz_count_roots(chain, lo, hi) == 1 and \
                            self._count_in_interval(g) and other._count_in_interval(g):
                        raise ValueError("cannot separate equal algebraic numbers")
            self.refine()
            other.refine()

    def __repr__(self):
        return f"AlgebraicReal({self.poly}, ({self.lo}, {self.hi}))"


def isolate_real_roots(p) -> list:
    """Isolate the distinct real roots of a nonzero rational polynomial.

    Returns AlgebraicReal instances ordered increasingly, each carrying the
    multiplicity of its root in p.  Intervals are pairwise disjoint.
    """
    if isinstance(p, UniPoly):
        pz = p.to_zz_primitive()
    else:
        pz = ik.zz_primitive([int(c) for c in p])
    if not pz:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if len(pz) == 1:
        return []
    roots = []
    for factor, mult in ik.zz_squarefree_decomposition(pz):
        for lo, hi in _isolate_squarefree(factor):
            r = AlgebraicReal(factor, lo, hi, multiplicity=mult)
            roots.append(r)
    # roots of distinct squarefree factors are distinct; make intervals disjoint
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i].poly is not roots[j].poly:
                roots[i].separate_from(roots[j])
    roots.sort(key=lambda r: r.midpoint)
    return roots


def _isolate_squarefree(f):
    """Isolating intervals (lo, hi) for all real roots of squarefree f."""
    chain = ik.zz_sturm_chain(f)
    b = ik.zz_root_bound(f)
    # round the Cauchy bound up to a power of two so every bisection endpoint
    # stays dyadic; sign evaluations then avoid large gcd normalizations
    bound = Fraction(1 << ((b.numerator // b.denominator).bit_length() + 1))
    out = []

    def recurse(lo, hi, nlo, nhi):
        count = nlo - nhi
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if ik.zz_sign_at(f, mid) == 0:
            # mid is a root; carve an interval for it and recurse on both sides
            w = (hi - lo) / 8
            while ik.zz_sign_at(f, mid - w) == 0 or ik.zz_sign_at(f, mid + w) == 0 or \
                    ik.zz_count_roots(chain, mid - w, mid + w) != 1:
                w /= 2
            out.append((mid - w, mid + w))
            nl, nr = ik.zz_variations_at(chain, mid - w), ik.zz_variations_at(chain, mid + w)
            recurse(lo, mid - w, nlo, nl)
            recurse(mid + w, hi, nr, nhi)
            return
        nmid = ik.zz_variations_at(chain, mid)
        recurse(lo, mid, nlo, nmid)
        recurse(mid, hi, nmid, nhi)

    lo, hi = -bound, bound
    recurse(lo, hi, ik.zz_variations_at(chain, lo), ik.zz_variations_at(chain, hi))
    out.sort()
    return out


def sign_at_rational_pair(expr: BiPoly, x: Fraction, y: Fraction) -> int:
    v = expr(rat(x), rat(y))
    return (v > 0) - (v < 0)


def certified_sign(expr: BiPoly, point) -> int:
    """Exact sign (-1, 0, 1) of a rational bivariate polynomial at a point.

    Point coordinates are AlgebraicReal or rationals.  Nonzero signs come
    from interval refinement; the zero case is certified through an
    annihilating polynomial for expr(point) built by resultant elimination,
    whose smallest nonzero root bounds how far refinement must go.
    """
    expr = _bicoerce(expr)
    x, y = point
    if not isinstance(x, AlgebraicReal) and not isinstance(y, AlgebraicReal):
        return sign_at_rational_pair(expr, x, y)
    if not isinstance(x, AlgebraicReal):
        return _univariate_sign(expr.subs_x(rat(x)), y)
    if not isinstance(y, AlgebraicReal):
        return _univariate_sign(expr.subs_y(rat(y)), x)
    return _pair_sign(expr, x, y)


def _univariate_sign(q: UniPoly, alpha: AlgebraicReal) -> int:
    if q.is_zero:
        return 0
    return alpha.sign_of(q)


def _box_eval(expr: BiPoly, ix: RatInterval, iy: RatInterval) -> RatInterval:
    acc = RatInterval.point(0)
    for (i, j), c in expr.terms.items():
        t = RatInterval.point(c)
        for _ in range(i):
            t = t * ix
        for _ in range(j):
            t = t * iy
        acc = acc + t
    return acc


def _pair_sign(expr: BiPoly, alpha: AlgebraicReal, beta: AlgebraicReal) -> int:
    for _ in range(3):
        s = _box_eval(expr, alpha.interval, beta.interval).sign()
        if s is not None:
            return s
        alpha.refine()
        beta.refine()
    ann = _annihilator(expr, alpha, beta)
    azz = ann.to_zz_primitive()
    m = 0
    while m < len(azz) and azz[m] == 0:
        m += 1
    if m == 0:
        # zero is not a root of the annihilator: the value is nonzero
        while True:
            s = _box_eval(expr, alpha.interval, beta.interval).sign()
            if s is not None:
                return s
            alpha.refine()
            beta.refine()
    tail = azz[m:]
    a0 = abs(tail[0])
    amax = max(abs(c) for c in tail[1:]) if len(tail) > 1 else 0
    rho = Fraction(a0, a0 + amax) if amax else Fraction(1)
    while True:
        box = _box_eval(expr, alpha.interval, beta.interval)
        s = box.sign()
        if s is not None:
            return s
        if box.mag() < rho:
            return 0
        alpha.refine()
        beta.refine()


def _annihilator(expr: BiPoly, alpha: AlgebraicReal, beta: AlgebraicReal) -> UniPoly:
    """A nonzero rational polynomial vanishing at expr(alpha, beta).

    Built as Res_x(f, Res_y(g, u - expr)) by sampling u and interpolating,
    where f, g define alpha, beta.
    """
    f = UniPoly.from_zz(alpha.poly)
    g = UniPoly.from_zz(beta.poly)
    degree = f.degree * g.degree
    samples = []
    u = 0
    while len(samples) < degree + 1:
        inner = _resultant_y_shifted(expr, g, Fraction(u))
        if inner.is_zero:
            raise ArithmeticError("degenerate elimination; expression independent of y")
        from .poly import resultant
        val = resultant(f, inner) if inner.degree > 0 else inner[0] ** f.degree
        samples.append((Fraction(u), val))
        u += 1
    return interpolate(samples, degree)


def _resultant_y_shifted(expr: BiPoly, g: UniPoly, u: Fraction) -> UniPoly:
    """Res_y(g(y), u - expr(x, y)) as a UniPoly in x."""
    from .poly import resultant_bivariate
    shifted = BiPoly.const(u) - expr
    gy = BiPoly({(0, j): c for j, c in enumerate(g.coeffs)})
    return resultant_bivariate(gy, shifted, eliminate="y")
