"""Curves with coefficients polynomial in one parameter, and their nodes.

A member family is an affine plane curve G(x, y) whose coefficients are
integer polynomials in a parameter; pencils of cubics (coefficients linear
in the parameter) are the main client.

At a parameter value where the member is singular, the unique singular
point is located through first subresultants of resultant eliminants: its
coordinates are rational functions of the parameter.  Signs of local data
(Hessian determinant, tangent-cone values) are evaluated on that
rational-function DAG with outward interval arithmetic, falling back to
symbolic expansion plus exact gcd certificates only when a value refuses
to separate from zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonGenericConfiguration
from .exact import intkernel as ik
from .exact.dyadic import (dy_add, dy_div, dy_from_int, dy_horner,
                           dy_interval, dy_mul, dy_poly, dy_sign)
from .exact.poly import BiPoly, interpolate
from .exact.roots import AlgebraicReal


# -- bivariate polynomials over Z[par]: dict (i, j) -> zz ------------------

def lb_strip(g):
    return {k: v for k, v in g.items() if v}


def lb_diff(g, var):
    out = {}
    for (i, j), c in g.items():
        e = (i, j)[var]
        if e:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            out[key] = ik.zz_add(out.get(key, []), ik.zz_scale(c, e))
    return out


def lb_euler_z(g, degree):
    """z-partial of the degree-d homogenization, restricted to z = 1."""
    out = {}
    for (i, j), c in g.items():
        m = degree - i - j
        if m:
            out[(i, j)] = ik.zz_scale(c, m)
    return out


def lb_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = ik.zz_add(out.get(k, []), ik.zz_mul(c1, c2))
    return lb_strip(out)


def lb_sub(a, b):
    out = {k: list(v) for k, v in a.items()}
    for k, c in b.items():
        out[k] = ik.zz_sub(out.get(k, []), c)
    return lb_strip(out)


def lb_specialize(g, par: Fraction) -> BiPoly:
    """Specialize the parameter to a rational; returns a BiPoly over Q."""
    return BiPoly({k: ik.zz_eval_rat(c, par) for k, c in g.items()})


def lb_eval_point(g, x: Fraction, y: Fraction):
    """Evaluate at a rational point, scaled integrally: zz poly in the parameter.

    Returns den^d * g(x, y) where den is the common denominator and d the
    total degree; zero exactly where g(x, y) vanishes.
    """
    d = max((i + j for (i, j) in g), default=0)
    acc = []
    for (i, j), c in g.items():
        s = (x.numerator ** i) * (x.denominator ** (d - i)) * \
            (y.numerator ** j) * (y.denominator ** (d - j))
        acc = ik.zz_add(acc, ik.zz_scale(c, s))
    return acc


def lb_pardeg(g):
    return max((len(c) - 1 for c in g.values()), default=-1)


# -- resultant eliminants by interpolation ----------------------------------

def _to_zzx(d, outer_axis):
    """Integer dict (i,j)->int as zzx with the given outer axis (0=x, 1=y)."""
    do = max(k[outer_axis] for k in d)
    di = max(k[1 - outer_axis] for k in d)
    out = [[0] * (di + 1) for _ in range(do + 1)]
    for k, c in d.items():
        out[k[outer_axis]][k[1 - outer_axis]] = c
    return ik.zzx_strip([ik.zz_strip(r) for r in out])


def resultant_eliminant(gA, gB, eliminate_axis):
    """Res of two Z[par]-coefficient bivariate polys along x (0) or y (1).

    Returns a zzx polynomial, outer variable the surviving one, inner the
    parameter.  Computed by specializing the parameter at integers where no
    degree drop occurs and interpolating coefficientwise; surplus samples
    cross-check the degree bound.
    """
    dA = max(k[eliminate_axis] for k in gA)
    dB = max(k[eliminate_axis] for k in gB)
    bound = lb_pardeg(gA) * dB + lb_pardeg(gB) * dA
    needed = bound + 3
    lam = -(needed // 2 + 1)
    lams, vals = [], []
    while len(lams) < needed:
        sA = {k: int(ik.zz_eval_rat(c, Fraction(lam))) for k, c in gA.items()}
        sB = {k: int(ik.zz_eval_rat(c, Fraction(lam))) for k, c in gB.items()}
        sA = {k: v for k, v in sA.items() if v}
        sB = {k: v for k, v in sB.items() if v}
        if max((k[eliminate_axis] for k in sA), default=-1) != dA or \
           max((k[eliminate_axis] for k in sB), default=-1) != dB:
            lam += 1
            continue
        r = ik.zzx_resultant(_to_zzx(sA, eliminate_axis), _to_zzx(sB, eliminate_axis))
        lams.append(Fraction(lam))
        vals.append(r)
        lam += 1
    sdeg = max((len(v) - 1 for v in vals), default=-1)
    coeffs = []
    for i in range(sdeg + 1):
        pts = [(l, Fraction(v[i] if i < len(v) else 0)) for l, v in zip(lams, vals)]
        c = interpolate(pts, bound)
        cz, den = c.to_zz()
        if den != 1:
            raise ArithmeticError("eliminant interpolation produced non-integers")
        coeffs.append(cz)
    return ik.zzx_strip(coeffs)


# -- member families ---------------------------------------------------------

class MemberFamily:
    """Affine plane curve of bounded degree with Z[par] coefficients."""

    def __init__(self, coeffs, degree):
        self.G = lb_strip({k: list(v) for k, v in coeffs.items()})
        self.degree = degree
        self.Gx = lb_diff(self.G, 0)
        self.Gy = lb_diff(self.G, 1)
        self.Gz = lb_euler_z(self.G, degree)
        self._locator = None
        self._hessian = None
        self._expand_cache = {}

    @staticmethod
    def pencil(F0, F1, degree=3) -> "MemberFamily":
        """Family F0 + par*F1 in the chart z = 1.

        F0, F1 map homogeneous exponents (i, j, k), i+j+k = degree, to ints.
        """
        out = {}
        for src, pos in ((F0, 0), (F1, 1)):
            for (i, j, _k), c in src.items():
                cur = out.setdefault((i, j), [0, 0])
                cur[pos] += c
        return MemberFamily({k: ik.zz_strip(v) for k, v in out.items()}, degree)

    def member_at(self, par: Fraction) -> BiPoly:
        return lb_specialize(self.G, par)

    def locator(self) -> "NodeLocator":
        if self._locator is None:
            self._locator = NodeLocator(self)
        return self._locator

    def hessian(self):
        if self._hessian is None:
            gxx = lb_diff(self.Gx, 0)
            gxy = lb_diff(self.Gx, 1)
            gyy = lb_diff(self.Gy, 1)
            self._hessian = lb_sub(lb_mul(gxx, gyy), lb_mul(gxy, gxy))
        return self._hessian

    def tangent_cone_value(self, direction):
        """Quadratic form of second partials applied to a rational direction.

        Returns the Z[par]-coefficient bivariate polynomial Q(x, y) =
        Gxx*v1^2 + 2*Gxy*v1*v2 + Gyy*v2^2 whose vanishing at the node means
        the direction is a node branch tangent.
        """
        v1, v2 = direction
        num1, num2 = v1.numerator * v2.denominator, v2.numerator * v1.denominator
        gxx = lb_diff(self.Gx, 0)
        gxy = lb_diff(self.Gx, 1)
        gyy = lb_diff(self.Gy, 1)
        out = {}
        for g, s in ((gxx, num1 * num1), (gxy, 2 * num1 * num2), (gyy, num2 * num2)):
            for k, c in g.items():
                out[k] = ik.zz_add(out.get(k, []), ik.zz_scale(c, s))
        return lb_strip(out)

    def singular_rational_parameters(self, point):
        """Rational parameter values whose member is singular at a given point.

        Works when the combined vanishing conditions reduce to a polynomial
        of degree <= 1 in the parameter (always true for pencils).
        """
        x, y = point
        g = []
        for part in (self.G, self.Gx, self.Gy):
            g = ik.zz_gcd(g, lb_eval_point(part, x, y)) if g else \
                ik.zz_primitive(lb_eval_point(part, x, y))
            if len(g) == 1:
                return []
        if not g:
            raise NonGenericConfiguration(
                "every member of the family is singular at a constraint point")
        if len(g) == 2:
            return [Fraction(-g[0], g[1])]
        # higher-degree common factor: report its rational roots only
        out = []
        for cand_num in _divisors(abs(g[0])) if g[0] else [0]:
            for cand_den in _divisors(abs(g[-1])):
                for s in (1, -1):
                    v = Fraction(s * cand_num, cand_den)
                    if ik.zz_eval_rat(g, v) == 0 and v not in out:
                        out.append(v)
        return sorted(out)


def _divisors(n):
    if n == 0:
        return [0]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


class NodeLocator:
    """First-subresultant data locating the unique singular point."""

    def __init__(self, fam: MemberFamily):
        self.fam = fam
        A = resultant_eliminant(fam.Gx, fam.Gy, eliminate_axis=1)
        B = resultant_eliminant(fam.Gx, fam.Gz, eliminate_axis=1)
        D = resultant_eliminant(fam.Gx, fam.Gy, eliminate_axis=0)
        E = resultant_eliminant(fam.Gx, fam.Gz, eliminate_axis=0)
        if min(len(A), len(B), len(D), len(E)) < 3:
            raise NonGenericConfiguration("degenerate singular-point eliminants")
        self.A, self.B, self.D, self.E = A, B, D, E
        s1x = ik.zzx_subresultant(A, B, 1)
        s1y = ik.zzx_subresultant(D, E, 1)
        self.x_num = ik.zz_neg(s1x[0]) if s1x else []
        self.x_den = s1x[1] if len(s1x) > 1 else []
        self.y_num = ik.zz_neg(s1y[0]) if s1y else []
        self.y_den = s1y[1] if len(s1y) > 1 else []
        # specialization guards: the leading coefficients, in each eliminated
        # variable, of the partials and of the eliminants themselves
        self.guards = []
        for g in (fam.Gx, fam.Gy, fam.Gz):
            for axis in (0, 1):
                self.guards.append(_lc_guard(g, axis))
        for e in (A, B, D, E):
            self.guards.append(e[-1])
        self._infinity = None

    def degenerate_at(self, par) -> bool:
        """True when the subresultant picture fails at this parameter (wall).

        Accepts an AlgebraicReal or an exact rational.
        """
        polys = list(self.guards) + [self.x_den, self.y_den]
        for g in polys:
            if not g:
                return True
            if isinstance(par, AlgebraicReal):
                if par.sign_of(g) == 0:
                    return True
            elif ik.zz_eval_rat(g, par) == 0:
                return True
        return False

    def node_at_rational(self, par: Fraction):
        xd = ik.zz_eval_rat(self.x_den, par)
        yd = ik.zz_eval_rat(self.y_den, par)
        if xd == 0 or yd == 0:
            raise NonGenericConfiguration("node locator degenerates at rational member")
        x = -ik.zz_eval_rat(self.x_num, par) / xd
        y = -ik.zz_eval_rat(self.y_num, par) / yd
        return x, y

    def _coeff_bits(self):
        bits = 64
        for g in (self.x_num, self.x_den, self.y_num, self.y_den):
            for c in g:
                if c:
                    bits = max(bits, abs(c).bit_length())
        return bits

    def node_box(self, par: AlgebraicReal, prec=128):
        """Dyadic interval box enclosing the node coordinates."""
        prec = max(prec, self._coeff_bits() + 128)
        while True:
            box = dy_interval(par.lo, par.hi, prec)
            try:
                xb = dy_div(dy_horner(dy_poly(ik.zz_neg(self.x_num), prec), box, prec),
                            dy_horner(dy_poly(self.x_den, prec), box, prec), prec)
                yb = dy_div(dy_horner(dy_poly(ik.zz_neg(self.y_num), prec), box, prec),
                            dy_horner(dy_poly(self.y_den, prec), box, prec), prec)
                return xb, yb
            except ZeroDivisionError:
                par.refine()
                par.refine()
                prec += prec // 2

    def infinity_guard_polys(self):
        """Pairwise resultants + top coefficients of the partials at infinity.

        Returns (list of three pairwise-resultant zz polys, list of three top
        coefficient zz polys).  The member at `par` can only be singular on
        the line z = 0 if all three resultants vanish at par, or all three
        tops vanish at par.
        """
        if self._infinity is not None:
            return self._infinity
        fam = self.fam
        forms = []
        tops = []
        for g in (fam.Gx, fam.Gy, fam.Gz):
            # restriction to z = 0 is the top-degree part; dehomogenize y -> 1
            deh = {}
            tcoef = []
            for (i, j), c in g.items():
                if i + j == fam.degree - 1:
                    deh[(i, 0)] = ik.zz_add(deh.get((i, 0), []), c)
                    if j == 0:
                        tcoef = ik.zz_add(tcoef, c)
            forms.append(lb_strip(deh))
            tops.append(tcoef)
        res = []
        pairs = ((0, 1), (0, 2), (1, 2))
        for a, b in pairs:
            fa, fb = forms[a], forms[b]
            if not fa or not fb:
                res.append([])
                continue
            da = max(i for (i, _) in fa)
            db = max(i for (i, _) in fb)
            if da == 0 or db == 0:
                # constant in x: the "resultant" is a power of the constant
                res.append(fa.get((0, 0), fb.get((0, 0), [])))
                continue
            r = resultant_eliminant(fa, fb, eliminate_axis=0)
            res.append(r[0] if r else [])
        self._infinity = (res, tops)
        return self._infinity

    def singular_at_infinity(self, par) -> bool:
        """Conservative test: False certifies no singular point on z = 0."""
        res, tops = self.infinity_guard_polys()

        def is_zero(g):
            if not g:
                return True
            if isinstance(par, AlgebraicReal):
                return par.sign_of(g) == 0
            return ik.zz_eval_rat(g, par) == 0

        finite_clean = any(not is_zero(r) for r in res)
        top_clean = any(not is_zero(t) for t in tops)
        return not (finite_clean and top_clean)


def _lc_guard(g, axis):
    """gcd of the leading-slice coefficients in the given variable.

    Nonvanishing at a parameter certifies that the degree in that variable
    survives specialization.
    """
    d = max(k[axis] for k in g)
    acc = []
    for k, c in g.items():
        if k[axis] == d:
            acc = ik.zz_gcd(acc, c) if acc else ik.zz_primitive(c)
            if len(acc) == 1:
                return acc
    return acc


def sign_bipoly_at_node(g, locator: NodeLocator, par: AlgebraicReal,
                        cache_key=None) -> int:
    """Exact sign of a Z[par] bivariate polynomial at the located node.

    Interval evaluation on the rational-function DAG first; on persistent
    ambiguity, symbolic expansion (cached on the family) plus the exact
    algebraic-number sign decides.
    """
    prec = locator._coeff_bits() + 128
    for _ in range(5):
        s = _box_sign(g, locator, par, prec)
        if s is not None:
            return s
        par.refine()
        par.refine()
        prec *= 2
    cache = locator.fam._expand_cache
    if cache_key is not None and cache_key in cache:
        num = cache[cache_key]
    else:
        num = expand_at_node(g, locator)
        if cache_key is not None:
            cache[cache_key] = num
    return par.sign_of(num)


def _box_sign(g, locator: NodeLocator, par: AlgebraicReal, prec):
    box = dy_interval(par.lo, par.hi, prec)
    try:
        t1 = dy_horner(dy_poly(locator.x_den, prec), box, prec)
        u1 = dy_horner(dy_poly(locator.y_den, prec), box, prec)
        xb = dy_div(dy_horner(dy_poly(ik.zz_neg(locator.x_num), prec), box, prec), t1, prec)
        yb = dy_div(dy_horner(dy_poly(ik.zz_neg(locator.y_num), prec), box, prec), u1, prec)
    except ZeroDivisionError:
        return None
    acc = dy_from_int(0, prec)
    for (i, j), c in g.items():
        t = dy_horner(dy_poly(c, prec), box, prec)
        for _ in range(i):
            t = dy_mul(t, xb, prec)
        for _ in range(j):
            t = dy_mul(t, yb, prec)
        acc = dy_add(acc, t, prec)
    return dy_sign(acc)


def expand_at_node(g, locator: NodeLocator):
    """Numerator of g(node) as a zz polynomial in the parameter.

    Denominators are cleared to even powers, so the numerator sign equals
    the sign of g at the node.
    """
    dx = max((i for (i, _) in g), default=0)
    dyd = max((j for (_, j) in g), default=0)
    DX = dx + (dx % 2)
    DY = dyd + (dyd % 2)
    acc = []
    for (i, j), c in g.items():
        term = list(c)
        for _ in range(i):
            term = ik.zz_mul(term, locator.x_num)
        for _ in range(DX - i):
            term = ik.zz_mul(term, locator.x_den)
        for _ in range(j):
            term = ik.zz_mul(term, locator.y_num)
        for _ in range(DY - j):
            term = ik.zz_mul(term, locator.y_den)
        acc = ik.zz_add(acc, term)
    return acc
