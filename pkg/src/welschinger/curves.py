"""Plane projective curves of degree at most 3 and their singular points.

Curves carry homogeneous rational coefficients (an extension-carrier variant
stores coefficients as polynomials in a defining parameter).  Singular
points are found by resultant elimination plus certified sign tests; node
classification is the sign of the Hessian determinant, and the count's sign
is the solitary-node parity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (DegenerateNode, NotSingular,
                     PositiveDimensionalSingularLocus)
from .exact import intkernel as ik
from .exact.poly import BiPoly, UniPoly
from .exact.roots import AlgebraicReal, certified_sign, isolate_real_roots
from .qq import rat


class NodeType(enum.Enum):
    SOLITARY = "solitary"
    NON_SOLITARY = "non_solitary"
    IMAGINARY_PAIR = "imaginary_pair"
    DEGENERATE = "degenerate"


@dataclass
class NodeInfo:
    """A singular point with its local type.

    `location` holds exact coordinates in the chart `chart` ("z", "y" or
    "x" set to 1); it is None for imaginary conjugate pairs, which are
    recorded by presence only.
    """
    ntype: NodeType
    location: Optional[tuple] = None
    chart: str = "z"
    detail: str = ""

    @property
    def is_solitary(self) -> bool:
        return self.ntype is NodeType.SOLITARY


def monomials(degree):
    return [(i, j, degree - i - j) for i in range(degree + 1)
            for j in range(degree + 1 - i)]


class PlaneCurve:
    """Projective plane curve of degree 1, 2 or 3 over Q."""

    def __init__(self, degree, coeffs):
        if degree not in (1, 2, 3):
            raise ValueError("degree must be 1, 2 or 3")
        self.degree = degree
        self.coeffs = {}
        for (i, j, k), c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
            if i + j + k != degree:
                raise ValueError("exponents do not match the degree")
            c = rat(c)
            if c:
                self.coeffs[(i, j, k)] = c
        if not self.coeffs:
            raise ValueError("zero coefficient vector")

    @staticmethod
    def from_affine(g: BiPoly, degree) -> "PlaneCurve":
        terms = {}
        for (i, j), c in g.terms.items():
            if i + j > degree:
                raise ValueError("affine degree exceeds the declared degree")
            terms[(i, j, degree - i - j)] = c
        return PlaneCurve(degree, terms)

    def affine(self, chart="z") -> BiPoly:
        """Dehomogenize; charts map to coordinates (x,y), (x,z) or (y,z)."""
        out = {}
        for (i, j, k), c in self.coeffs.items():
            if chart == "z":
                key = (i, j)
            elif chart == "y":
                key = (i, k)
            else:
                key = (j, k)
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def scaled_integer_coeffs(self):
        den = 1
        from math import gcd
        for c in self.coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {k: int(c * den) for k, c in self.coeffs.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, abs(c))
        if g > 1:
            ints = {k: c // g for k, c in ints.items()}
        return ints

    def __repr__(self):
        return f"PlaneCurve(degree={self.degree}, {len(self.coeffs)} terms)"


@dataclass
class ExtensionCurve:
    """Degree-d curve over a real algebraic extension.

    Coefficients are polynomials in the extension generator, which is the
    root of `defining` isolated by `value`.
    """
    degree: int
    defining: UniPoly
    value: AlgebraicReal
    coeff_polys: dict  # (i, j, k) -> UniPoly

    def specialize_float(self):
        t = float(self.value)
        return {k: float(p(Fraction(t).limit_denominator(10**12))) for k, p in self.coeff_polys.items()}


def _smooth_eliminant(curve: PlaneCurve):
    """Integer multiple of the resultant of the three partials; 0 iff singular."""
    ints = curve.scaled_integer_coeffs()
    if curve.degree == 1:
        return 1
    if curve.degree == 2:
        # determinant of the symmetric matrix of the quadratic form
        a = {k: Fraction(v) for k, v in ints.items()}
        m = [[a.get((2, 0, 0), Fraction(0)), a.get((1, 1, 0), Fraction(0)) / 2, a.get((1, 0, 1), Fraction(0)) / 2],
             [a.get((1, 1, 0), Fraction(0)) / 2, a.get((0, 2, 0), Fraction(0)), a.get((0, 1, 1), Fraction(0)) / 2],
             [a.get((1, 0, 1), Fraction(0)) / 2, a.get((0, 1, 1), Fraction(0)) / 2, a.get((0, 0, 2), Fraction(0))]]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        return det
    return cubic_eliminant(ints)


def cubic_eliminant(ints):
    """512 * Res(F_x, F_y, F_z) of an integer ternary cubic.

    Sylvester's formula: the 6x6 determinant of the three polar quadrics
    together with the partials of their Jacobian determinant.
    """
    import itertools

    def fdiff(f, var):
        out = {}
        for mono, c in f.items():
            e = mono[var]
            if e:
                key = tuple(v - (1 if t == var else 0) for t, v in enumerate(mono))
                out[key] = out.get(key, 0) + e * c
        return out

    def fmul(f, g):
        out = {}
        for kf, a in f.items():
            for kg, b in g.items():
                k = tuple(x + y for x, y in zip(kf, kg))
                out[k] = out.get(k, 0) + a * b
        return out

    p, q, r = (fdiff(ints, v) for v in range(3))
    grads = [[fdiff(f, v) for v in range(3)] for f in (p, q, r)]
    jac = {}
    for perm in itertools.permutations(range(3)):
        inv = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
        prod = {(0, 0, 0): -1 if inv % 2 else 1}
        for row in range(3):
            prod = fmul(prod, grads[row][perm[row]])
        for k, c in prod.items():
            jac[k] = jac.get(k, 0) + c
    qbasis = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    rows = [[f.get(k, 0) for k in qbasis] for f in (p, q, r)]
    for v in range(3):
        jv = fdiff(jac, v)
        rows.append([jv.get(k, 0) for k in qbasis])
    return ik.int_bareiss_det(rows)


def has_multiple_component(curve: PlaneCurve) -> bool:
    """True when the defining form has a repeated factor."""
    g = curve.affine("z")
    if curve.degree - g.total_degree >= 2:
        return True  # repeated line-at-infinity factor
    gi, _ = _bipoly_ints(g)
    d = _zzx_from_ints(gi, 0)
    content = ik.zzx_content(d)
    if len(content) > 1 and len(ik.zz_gcd(content, ik.zz_diff(content))) > 1:
        return True
    pp = ik.zzx_primitive(d)
    dd = ik.zzx_diff_x(pp)
    if dd and len(_zzx_gcd(pp, dd)) > 1:
        return True
    return False


def _bipoly_ints(g: BiPoly):
    from math import gcd
    den = 1
    for c in g.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {k: int(c * den) for k, c in g.terms.items()}, den


def _zzx_from_ints(d, outer_axis):
    do = max(k[outer_axis] for k in d)
    di = max(k[1 - outer_axis] for k in d)
    out = [[0] * (di + 1) for _ in range(do + 1)]
    for k, c in d.items():
        out[k[outer_axis]][k[1 - outer_axis]] = c
    return ik.zzx_strip([ik.zz_strip(r) for r in out])


def _zzx_prem(f, g):
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return [list(c) for c in f]
    rem = [list(c) for c in f]
    lg = g[-1]
    for k in range(df - dg, -1, -1):
        q = rem[k + dg]
        rem = [ik.zz_mul(lg, c) for c in rem]
        if q:
            for i, b in enumerate(g):
                rem[k + i] = ik.zz_sub(rem[k + i], ik.zz_mul(q, b))
    return ik.zzx_strip(rem)


def _zzx_gcd(f, g):
    """Primitive gcd in Z[inner][outer] via the primitive PRS."""
    f = ik.zzx_primitive(f)
    g = ik.zzx_primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = ik.zzx_primitive(_zzx_prem(f, g))
        f, g = g, r
    # content of the pair also divides the gcd; contents were stripped, so
    # the result is the primitive gcd up to sign
    return f


def singular_points(curve: PlaneCurve):
    """All projective singular points of a rational-coefficient curve.

    Real points come with certified algebraic coordinates; imaginary ones
    are reported as conjugate pairs by presence.  Raises on curves with a
    multiple component.
    """
    if has_multiple_component(curve):
        raise PositiveDimensionalSingularLocus("curve has a repeated component")
    if _smooth_eliminant(curve) != 0:
        return []
    if curve.degree == 1:
        return []
    if curve.degree == 2:
        return _conic_singularities(curve)
    out = _affine_singularities(curve, "z")
    out.extend(_infinity_singularities(curve))
    return out


def _conic_singularities(curve: PlaneCurve):
    a = {k: Fraction(v) for k, v in curve.coeffs.items()}
    m = [[2 * a.get((2, 0, 0), Fraction(0)), a.get((1, 1, 0), Fraction(0)), a.get((1, 0, 1), Fraction(0))],
         [a.get((1, 1, 0), Fraction(0)), 2 * a.get((0, 2, 0), Fraction(0)), a.get((0, 1, 1), Fraction(0))],
         [a.get((1, 0, 1), Fraction(0)), a.get((0, 1, 1), Fraction(0)), 2 * a.get((0, 0, 2), Fraction(0))]]
    kern = _kernel3(m)
    if len(kern) == 0:
        return []
    if len(kern) > 1:
        raise PositiveDimensionalSingularLocus("double line")
    v = kern[0]
    # classify: crossing of two lines (real or imaginary pair)
    if v[2]:
        x0, y0 = v[0] / v[2], v[1] / v[2]
        g = curve.affine("z")
        return [_classify_affine_node(g, x0, y0, "z")]
    chart = "y" if v[1] else "x"
    if chart == "y":
        pt = (v[0] / v[1], v[2] / v[1])
    else:
        pt = (v[1] / v[0], v[2] / v[0])
    return [_classify_affine_node(curve.affine(chart), pt[0], pt[1], chart)]


def _kernel3(m):
    import copy
    mm = [row[:] for row in m]
    n = 3
    piv = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if mm[i][c] != 0), None)
        if p is None:
            continue
        mm[r], mm[p] = mm[p], mm[r]
        mm[r] = [v / mm[r][c] for v in mm[r]]
        for i in range(n):
            if i != r and mm[i][c]:
                f = mm[i][c]
                mm[i] = [x - f * y for x, y in zip(mm[i], mm[r])]
        piv.append(c)
        r += 1
    out = []
    for fc in range(n):
        if fc in piv:
            continue
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for rr, pc in enumerate(piv):
            v[pc] = -mm[rr][fc]
        out.append(v)
    return out


def _affine_singularities(curve: PlaneCurve, chart):
    g = curve.affine(chart)
    gx, gy = g.diff_x(), g.diff_y()
    if gx.is_zero or gy.is_zero:
        # the curve is a union of parallel lines; squarefree means no affine
        # singular point (crossings sit on the line at infinity)
        return []
    from .exact.poly import resultant_bivariate
    ax = resultant_bivariate(gx, gy, "y")
    bx = resultant_bivariate(g, gx, "y")
    px = ax.gcd(bx)
    ay = resultant_bivariate(gx, gy, "x")
    by = resultant_bivariate(g, gx, "x")
    py = ay.gcd(by)
    if px.is_zero or py.is_zero:
        raise PositiveDimensionalSingularLocus(
            "degenerate elimination while solving the singular locus")
    out = []
    xs = isolate_real_roots(px) if px.degree >= 1 else []
    ys = isolate_real_roots(py) if py.degree >= 1 else []
    for xr in xs:
        for yr in ys:
            xa = _simplify_root(xr)
            ya = _simplify_root(yr)
            if certified_sign(g, (xa, ya)) == 0 and \
               certified_sign(gx, (xa, ya)) == 0 and \
               certified_sign(gy, (xa, ya)) == 0:
                out.append(_classify_affine_node(g, xa, ya, chart))
    # imaginary pairs: eliminant roots beyond the real ones, seen from either
    # coordinate (a conjugate pair can share its real x or its real y)
    excess_x = max(0, px.squarefree_part().degree - len(xs))
    excess_y = max(0, py.squarefree_part().degree - len(ys))
    for _ in range(max(excess_x, excess_y) // 2):
        out.append(NodeInfo(NodeType.IMAGINARY_PAIR, None, chart, "conjugate pair"))
    return out


def _simplify_root(r: AlgebraicReal):
    v = r.rational_value()
    if v is not None:
        return v
    # probe for a small rational root inside the isolating interval
    mid = (r.lo + r.hi) / 2
    for bound in (1, 12, 1000):
        cand = mid.limit_denominator(bound)
        if r.lo < cand < r.hi and ik.zz_eval_rat(r.poly, cand) == 0:
            return cand
    return r


def _infinity_singularities(curve: PlaneCurve):
    """Singular points on the line z = 0."""
    d = curve.degree
    gz = curve.affine("z")
    fx, fy = gz.diff_x(), gz.diff_y()
    # z-partial via Euler: d*F - x F_x - y F_y, top-degree part
    parts = []
    for part in (fx, fy):
        top = {}
        for (i, j), c in part.terms.items():
            if i + j == d - 1:
                top[(i, j)] = c
        parts.append(top)
    fz_top = {}
    for (i, j), c in gz.terms.items():
        m = d - i - j
        if m and i + j == d - 1:
            fz_top[(i, j)] = fz_top.get((i, j), 0) + m * c
    parts.append(fz_top)
    # binary forms in (x, y); common roots
    polys = []
    for top in parts:
        coeffs = [Fraction(0)] * d
        for (i, j), c in top.items():
            coeffs[i] += c
        polys.append(UniPoly(coeffs))
    g = None
    for p in polys:
        if p.is_zero:
            continue
        g = p if g is None else g.gcd(p)
    out = []
    if g is not None and g.degree >= 1:
        for root in isolate_real_roots(g):
            xa = _simplify_root(root)
            chart_curve = curve.affine("y")
            # point (x0 : 1 : 0) in chart y = 1 has coordinates (x0, 0)
            out.append(_classify_affine_node(chart_curve, xa, Fraction(0), "y"))
        n_complex = g.squarefree_part().degree
        pairs = max(0, n_complex - len(isolate_real_roots(g))) // 2
        for _ in range(pairs):
            out.append(NodeInfo(NodeType.IMAGINARY_PAIR, None, "y", "conjugate pair at infinity"))
    # the point (1:0:0): all tops must vanish there: coefficient of x^(d-1)
    if all(p.is_zero or p[p.degree] == 0 or p.degree < d - 1 for p in polys):
        if any(not p.is_zero for p in polys):
            chart_curve = curve.affine("x")
            out.append(_classify_affine_node(chart_curve, Fraction(0), Fraction(0), "x"))
    return out


def _classify_affine_node(g: BiPoly, x0, y0, chart) -> NodeInfo:
    h = _hessian_sign(g, x0, y0)
    if h > 0:
        return NodeInfo(NodeType.SOLITARY, (x0, y0), chart)
    if h < 0:
        return NodeInfo(NodeType.NON_SOLITARY, (x0, y0), chart)
    return NodeInfo(NodeType.DEGENERATE, (x0, y0), chart, _degenerate_detail(g, x0, y0))


def _hessian_sign(g: BiPoly, x0, y0) -> int:
    gxx = g.diff_x().diff_x()
    gxy = g.diff_x().diff_y()
    gyy = g.diff_y().diff_y()
    h = gxx * gyy - gxy * gxy
    return certified_sign(h, (x0, y0))


def _degenerate_detail(g: BiPoly, x0, y0) -> str:
    """Distinguish a cusp from worse degenerations, for rational points."""
    if not (isinstance(x0, Fraction) and isinstance(y0, Fraction)):
        return "degenerate"
    # translate to the origin
    shifted = {}
    for (i, j), c in g.terms.items():
        # binomial expansion
        for a in range(i + 1):
            for b in range(j + 1):
                from math import comb
                key = (a, b)
                shifted[key] = shifted.get(key, 0) + \
                    c * comb(i, a) * comb(j, b) * x0 ** (i - a) * y0 ** (j - b)
    s = BiPoly(shifted)
    q = [s.terms.get((2, 0), Fraction(0)), s.terms.get((1, 1), Fraction(0)),
         s.terms.get((0, 2), Fraction(0))]
    if not any(q):
        return "triple_point_or_worse"
    # rank-1 quadratic part: kernel direction (vx, vy)
    if q[0]:
        vx, vy = -q[1] / (2 * q[0]), Fraction(1)
    else:
        vx, vy = Fraction(1), -q[1] / (2 * q[2]) if q[2] else Fraction(0)
    cubic = sum(s.terms.get((i, j), Fraction(0)) * vx ** i * vy ** j
                for (i, j) in ((3, 0), (2, 1), (1, 2), (0, 3)))
    return "cusp" if cubic else "higher_tangency"


def classify_node(curve: PlaneCurve, point, chart="z") -> NodeType:
    """Node type at a singular point given in an affine chart."""
    g = curve.affine(chart)
    x0, y0 = point
    if certified_sign(g, (x0, y0)) != 0 or \
       certified_sign(g.diff_x(), (x0, y0)) != 0 or \
       certified_sign(g.diff_y(), (x0, y0)) != 0:
        raise NotSingular("point is not a singular point of the curve")
    return _classify_affine_node(g, x0, y0, chart).ntype


@dataclass
class RationalityCertificate:
    counted: bool
    diagnostic: str
    nodes: list = field(default_factory=list)


def is_counted_rational(curve: PlaneCurve) -> RationalityCertificate:
    """Counted means: irreducible and rational with at worst one node.

    Degrees 1-2: irreducible and smooth.  Degree 3: irreducible with
    exactly one nondegenerate node.
    """
    if curve.degree == 1:
        return RationalityCertificate(True, "line")
    if curve.degree == 2:
        if _smooth_eliminant(curve) != 0:
            return RationalityCertificate(True, "smooth conic")
        return RationalityCertificate(False, "reducible")
    if _smooth_eliminant(curve) != 0:
        return RationalityCertificate(False, "smooth cubic (genus 1)")
    try:
        nodes = singular_points(curve)
    except PositiveDimensionalSingularLocus:
        return RationalityCertificate(False, "reducible")
    if not nodes:
        # singular but the census resolved nothing: refuse conservatively
        return RationalityCertificate(False, "unresolved singular locus")
    if len(nodes) > 1:
        return RationalityCertificate(False, "reducible", nodes)
    node = nodes[0]
    if node.ntype is NodeType.DEGENERATE:
        return RationalityCertificate(False, node.detail or "degenerate", nodes)
    if node.ntype is NodeType.IMAGINARY_PAIR:
        return RationalityCertificate(False, "reducible", nodes)
    return RationalityCertificate(True, "uninodal cubic", nodes)


def welschinger_sign(nodes) -> int:
    """(-1)^(number of real solitary nodes); refuses degenerate nodes."""
    solitary = 0
    for n in nodes:
        t = n.ntype if isinstance(n, NodeInfo) else n
        if t is NodeType.DEGENERATE:
            raise DegenerateNode("degenerate node has no Welschinger sign")
        if t is NodeType.SOLITARY:
            solitary += 1
    return -1 if solitary % 2 else 1
