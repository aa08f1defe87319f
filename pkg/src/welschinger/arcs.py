"""Smooth parametrized arcs (jets), tangency orders, and jet conditions.

An arc of order s is a smooth s-jet of a parametrized curve germ, stored in
a reparametrization-normalized form: whichever of x(t), y(t) has a nonzero
linear part is normalized to center + t, which makes equality of arcs
decidable.  Jet conditions are the induced linear functionals on the
coefficient space of plane curves of a given degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import NodeType, PlaneCurve
from .errors import NotSmooth
from .exact.poly import BiPoly, UniPoly
from .exact.series import (series_add, series_compose, series_inverse,
                           series_mul, series_pow, series_scale, series_trim)
from .qq import QQi, rat


def _scalar(v):
    if isinstance(v, (QQi, Fraction)):
        return v
    return rat(v)


class AtLeast:
    """Marker: vanishing order is at least `order` (truncation exhausted)."""

    __slots__ = ("order",)

    def __init__(self, order):
        self.order = order

    def __eq__(self, other):
        return isinstance(other, AtLeast) and other.order == self.order

    def __repr__(self):
        return f"AtLeast({self.order})"


@dataclass(frozen=True)
class Arc:
    """A smooth s-arc: center plus truncated parametrization coefficients.

    `x_coeffs` and `y_coeffs` hold the t^1 .. t^s coefficients; the center
    is the t^0 term.  `reality` is "real" when every datum is real.
    """
    center: tuple
    x_coeffs: tuple
    y_coeffs: tuple
    order: int

    @property
    def reality(self) -> str:
        return "real" if self.is_real else "imaginary"

    @property
    def is_real(self) -> bool:
        for v in (*self.center, *self.x_coeffs, *self.y_coeffs):
            if isinstance(v, QQi) and v.im != 0:
                return False
        return True

    @property
    def direction(self):
        return (self.x_coeffs[0], self.y_coeffs[0])

    def x_series(self):
        return [self.center[0], *self.x_coeffs]

    def y_series(self):
        return [self.center[1], *self.y_coeffs]

    def real_parts(self):
        def re(v):
            return v.re if isinstance(v, QQi) else v
        return Arc(tuple(re(c) for c in self.center),
                   tuple(re(c) for c in self.x_coeffs),
                   tuple(re(c) for c in self.y_coeffs), self.order)


def make_arc(center, x_coeffs, y_coeffs, order) -> Arc:
    """Validate and normalize an arc.

    Coefficient lists give the t^1..t^order coefficients (shorter lists are
    zero-padded).  The parametrization is renormalized so that the x-linear
    coefficient becomes 1 when nonzero, else the y-linear one.
    """
    if order < 1:
        raise ValueError("arc order must be positive")
    cx, cy = (_scalar(center[0]), _scalar(center[1]))
    xs = [_scalar(c) for c in x_coeffs][:order]
    ys = [_scalar(c) for c in y_coeffs][:order]
    xs += [Fraction(0)] * (order - len(xs))
    ys += [Fraction(0)] * (order - len(ys))
    if not xs[0] and not ys[0]:
        raise NotSmooth("arc parametrization has vanishing linear part")
    # reparametrize t -> psi(t) so the lead branch becomes center + t
    lead, other = (xs, ys) if xs[0] else (ys, xs)
    phi = [lead[0] * 0, *lead]
    psi = series_inverse(phi, order + 1)
    new_lead = [Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1)
    new_other = series_compose([other[0] * 0, *other], psi, order + 1)
    new_other = new_other + [Fraction(0)] * (order + 1 - len(new_other))
    if xs[0]:
        nx, ny = new_lead, new_other
    else:
        nx, ny = new_other, new_lead
    return Arc((cx, cy), tuple(nx[1:order + 1]), tuple(ny[1:order + 1]), order)


def conjugate_arc(a: Arc) -> Arc:
    def conj(v):
        return v.conjugate() if isinstance(v, QQi) else v
    return Arc(tuple(conj(c) for c in a.center),
               tuple(conj(c) for c in a.x_coeffs),
               tuple(conj(c) for c in a.y_coeffs), a.order)


def tangency_order(f: BiPoly, a: Arc):
    """Order of vanishing of f along the arc, computed on the truncated jet.

    Returns an integer k <= order of the arc, or AtLeast(order+1) when every
    computable coefficient vanishes.
    """
    if f.is_zero:
        raise ValueError("tangency order of the zero polynomial")
    n = a.order + 1
    comp = f.eval_series(a.x_series(), a.y_series(), n)
    for k, c in enumerate(comp):
        if c:
            return k
    return AtLeast(n)


@dataclass
class JetConditions:
    """Linear functionals on the degree-d coefficient space.

    Each functional maps homogeneous monomial exponents (i, j, k) to a
    rational; a degree-d curve satisfies the conditions when every
    functional annihilates its coefficient vector.
    """
    degree: int
    functionals: list

    def evaluate(self, curve_coeffs, functional):
        acc = None
        for mono, w in functional.items():
            c = curve_coeffs.get(mono, 0)
            term = w * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def all_vanish(self, curve_coeffs) -> bool:
        return all(self.evaluate(curve_coeffs, f) == 0 for f in self.functionals)


def jet_conditions(a: Arc, order: int, degree: int) -> JetConditions:
    """The first `order` Taylor functionals of F(arc(t)) on degree-d curves.

    A real arc yields `order` real functionals; an imaginary arc yields
    2*order (real and imaginary parts), and its conjugate imposes nothing
    further on real curves.
    """
    if not (1 <= order <= a.order):
        raise ValueError("condition order exceeds the arc order")
    xs, ys = a.x_series(), a.y_series()
    functionals = [dict() for _ in range(order)]
    complexity = not a.is_real
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            mono = (i, j, degree - i - j)
            powx = series_pow(xs, i, order)
            powy = series_pow(ys, j, order)
            prod = series_mul(powx, powy, order)
            for k in range(min(order, len(prod))):
                if prod[k]:
                    functionals[k][mono] = prod[k]
    if not complexity:
        return JetConditions(degree, functionals)
    split = []
    for f in functionals:
        re = {m: (c.re if isinstance(c, QQi) else c) for m, c in f.items()}
        im = {m: c.im for m, c in f.items() if isinstance(c, QQi)}
        re = {m: c for m, c in re.items() if c}
        im = {m: c for m, c in im.items() if c}
        if re:
            split.append(re)
        if im:
            split.append(im)
    return JetConditions(degree, split)


def jet_functional(a: Arc, n: int, degree: int) -> dict:
    """The single t^n Taylor functional of F(arc(t)) on degree-d curves.

    Well defined for n up to the arc order; coefficients are rational for
    real arcs and Gaussian rational otherwise.
    """
    if not (0 <= n <= a.order):
        raise ValueError("functional index exceeds the arc order")
    xs, ys = a.x_series(), a.y_series()
    out = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            prod = series_mul(series_pow(xs, i, n + 1), series_pow(ys, j, n + 1), n + 1)
            if n < len(prod) and prod[n]:
                out[(i, j, degree - i - j)] = prod[n]
    return out


@dataclass
class EvenOrderFamily:
    """One member of the even-tangency demonstration family.

    The germ y = t^(2s), x = eps*t + t^2 + t^3 meets the x-axis arc with
    multiplicity 2s and carries a node at (-eps, (-eps)^s) whose type flips
    with the sign of eps; at eps = 0 the node degenerates.
    """
    arc: Arc
    germ: BiPoly
    curve: PlaneCurve | None
    node: tuple
    node_type: NodeType
    s: int
    eps: Fraction


def even_order_family(s: int, eps) -> EvenOrderFamily:
    if s < 1:
        raise ValueError("s must be at least 1")
    eps = rat(eps)
    arc = make_arc((0, 0), [1] + [0] * (2 * s - 1), [0] * (2 * s), 2 * s)
    germ = _implicitize_family(s, eps)
    node = (-eps, (-eps) ** s)
    h = _germ_hessian_sign(germ, node)
    if eps == 0:
        ntype = NodeType.DEGENERATE
    elif h > 0:
        ntype = NodeType.SOLITARY
    elif h < 0:
        ntype = NodeType.NON_SOLITARY
    else:
        ntype = NodeType.DEGENERATE
    curve = None
    if s == 1 and germ.total_degree <= 3:
        curve = PlaneCurve.from_affine(germ, 3)
    return EvenOrderFamily(arc, germ, curve, node, ntype, s, eps)


def _implicitize_family(s: int, eps: Fraction) -> BiPoly:
    """Eliminate t from x = eps t + t^2 + t^3, y = t^(2s)."""
    from .exact.poly import resultant_bivariate

    # Res_t(phi(t) - x, t^(2s) - y) computed with t as the second variable
    p = BiPoly({(1, 0): -1, (0, 1): eps, (0, 2): 1, (0, 3): 1})   # (x, t)
    q = BiPoly({(1, 0): -1, (0, 2 * s): 1})                        # (y, t)
    # align variables: treat both as polynomials in (u, t) with u = x or y;
    # build a common trivariate elimination by interpolating over y
    samples = []
    degy = 3  # Res degree in y equals deg_t of p
    yv = -2 - degy
    while len(samples) < degy + 2:
        yv += 1
        qt = UniPoly([-Fraction(yv)] + [0] * (2 * s - 1) + [1])
        pt = BiPoly({(0, 0): -1}) * BiPoly.x() + BiPoly({(0, 1): eps, (0, 2): 1, (0, 3): 1})
        r = resultant_bivariate(
            pt, BiPoly({(0, j): c for j, c in enumerate(qt.coeffs)}), "y")
        samples.append((Fraction(yv), r))
    # interpolate each x-coefficient in y
    deg_x = max(r.degree for _, r in samples)
    terms = {}
    from .exact.poly import interpolate
    for i in range(deg_x + 1):
        pts = [(yv, r[i]) for yv, r in samples]
        ci = interpolate(pts, degy)
        for j, c in enumerate(ci.coeffs):
            if c:
                terms[(i, j)] = c
    g = BiPoly(terms)
    if g.is_zero:
        raise ArithmeticError("implicitization failed")
    return g


def _germ_hessian_sign(g: BiPoly, node) -> int:
    gxx = g.diff_x().diff_x()
    gxy = g.diff_x().diff_y()
    gyy = g.diff_y().diff_y()
    h = gxx * gyy - gxy * gxy
    v = h(node[0], node[1])
    return (v > 0) - (v < 0)
