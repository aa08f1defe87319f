"""Truncated power series helpers over exact scalars (Fraction or QQi).

A series is a plain list of coefficients [c0, c1, ...] understood modulo
t^order; lists shorter than the order are implicitly zero-padded.
"""

from fractions import Fraction


def series_trim(a, order):
    return list(a[:order])


def series_add(a, b, order):
    n = min(order, max(len(a), len(b)))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(x + y)
    return out


def series_scale(a, c):
    return [c * x for x in a]


def series_mul(a, b, order):
    la, lb = min(len(a), order), min(len(b), order)
    out = [Fraction(0)] * min(order, max(la + lb - 1, 0) if (la and lb) else 0)
    for i in range(la):
        if a[i]:
            top = min(lb, order - i)
            for j in range(top):
                if b[j]:
                    out[i + j] = out[i + j] + a[i] * b[j]
    return out


def series_pow(a, n, order):
    out = [Fraction(1)]
    base = series_trim(a, order)
    while n:
        if n & 1:
            out = series_mul(out, base, order)
        n >>= 1
        if n:
            base = series_mul(base, base, order)
    return out


def series_compose(f, g, order):
    """f(g(t)) mod t^order; requires g to have no constant term."""
    if g and g[0]:
        raise ValueError("composition requires a series without constant term")
    acc = [Fraction(0)]
    for c in reversed(series_trim(f, order)):
        acc = series_mul(acc, g, order)
        acc = series_add(acc, [c], order)
    return acc


def series_inverse(phi, order):
    """Compositional inverse of phi = c1*t + c2*t^2 + ... with c1 != 0.

    Returns psi with phi(psi(t)) = t mod t^order.
    """
    if len(phi) < 2 or not phi[1] or (phi and phi[0]):
        raise ValueError("series must start c1*t with c1 != 0")
    c1 = phi[1]
    psi = [phi[1] * 0, 1 / c1]
    for n in range(2, order):
        comp = series_compose(phi, psi + [0 * c1], order=n + 1)
        err = comp[n] if n < len(comp) else 0
        psi.append(-err / c1)
    return psi

