"""Dense integer polynomial kernels.

Two layers, in the style of classical dup/dmp code:

* ``zz_*``  -- univariate polynomials as lists of Python ints, low degree
  first, no trailing zeros (the zero polynomial is ``[]``).
* ``zzx_*`` -- univariate polynomials in an outer variable whose coefficients
  are ``zz`` polynomials in an inner parameter, i.e. elements of Z[a][x].

Everything upstream (rationals, algebraic numbers, pencils) clears
denominators and calls into this module, so the hot loops run on plain
bignums.  Subresultants are computed from determinant polynomials rather
than remainder sequences: determinants commute with coefficient
specialization, which is what the algebraic-number arithmetic needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# zz: Z[x]
# ---------------------------------------------------------------------------

def zz_strip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def zz_degree(f):
    return len(f) - 1


def zz_neg(f):
    return [-c for c in f]


def zz_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return zz_strip(out)


def zz_sub(f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return zz_strip(out)


def zz_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return zz_strip(out)


def zz_scale(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def zz_diff(f):
    return [i * c for i, c in enumerate(f)][1:]


def zz_eval_int(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def zz_eval_rat(f, x: Fraction) -> Fraction:
    """Horner evaluation at an exact rational point."""
    num, den = x.numerator, x.denominator
    # f(n/d) * d^deg  computed integrally, then divided once.
    acc = 0
    dpow = 1
    for c in reversed(f):
        acc = acc * num + c * dpow
        dpow *= den
    # dpow == den**(deg+1); one factor too many.
    return Fraction(acc * den, dpow)


def zz_sign_at(f, x: Fraction) -> int:
    """Sign of f at a rational point, without building the Fraction."""
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(f):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def zz_content(f):
    c = 0
    for a in f:
        c = _igcd(c, abs(a))
        if c == 1:
            return 1
    return c


def zz_primitive(f):
    """Divide out the positive content (sign of the leading coefficient kept)."""
    if not f:
        return []
    c = zz_content(f)
    if c <= 1:
        return list(f)
    return [a // c for a in f]


def zz_div_exact(f, g):
    """Quotient f/g when the division is exact in Z[x]; raises otherwise."""
    if not g:
        raise ZeroDivisionError("exact division by zero polynomial")
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        raise ArithmeticError("inexact polynomial division")
    rem = list(f)
    out = [0] * (df - dg + 1)
    lg = g[-1]
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        if c % lg:
            raise ArithmeticError("inexact polynomial division")
        q = c // lg
        out[k] = q
        if q:
            for i, b in enumerate(g):
                rem[k + i] -= q * b
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return zz_strip(out)


def zz_prem(f, g):
    """Pseudo-remainder of f by g (lc(g)^(df-dg+1) * f mod g)."""
    df, dg = len(f) - 1, len(g) - 1
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    if df < dg:
        return list(f)
    rem = list(f)
    lg = g[-1]
    for k in range(df - dg, -1, -1):
        q = rem[k + dg]
        rem = [lg * c for c in rem]
        if q:
            for i, b in enumerate(g):
                rem[k + i] -= q * b
    return zz_strip(rem)


def zz_gcd(f, g):
    """Primitive gcd in Z[x] via the subresultant remainder sequence.

    Collins' beta factors keep coefficient growth polynomial without a
    content gcd at every step; contents are stripped only at entry and exit.
    """
    f, g = zz_primitive(f), zz_primitive(g)
    if not f:
        return g if not g or g[-1] > 0 else zz_neg(g)
    if not g:
        return f if f[-1] > 0 else zz_neg(f)
    if len(f) < len(g):
        f, g = g, f
    psi = -1
    delta = len(f) - len(g)
    beta = (-1) ** (delta + 1)
    while True:
        r = zz_prem(f, g)
        if not r:
            break
        r = [c // beta for c in r]
        f, g = g, r
        if len(g) == 1:
            return [1]
        lc = f[-1]
        if delta == 1:
            psi = -lc
        elif delta > 1:
            psi = ((-lc) ** delta) // (psi ** (delta - 1))
        delta = len(f) - len(g)
        beta = -lc * psi ** delta
    g = zz_primitive(g)
    return g if g[-1] > 0 else zz_neg(g)


_GCD_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


def zz_gcd_is_trivial(f, g) -> bool:
    """True certifies gcd(f, g) is constant (single good modular image).

    False means the gcd is probably nonconstant; callers fall back to the
    exact routine.
    """
    if not f or not g:
        return False
    for p in _GCD_PRIMES:
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        a = [c % p for c in f]
        b = [c % p for c in g]
        while True:
            while b and b[-1] == 0:
                b.pop()
            if not b:
                break
            if len(b) == 1:
                return True
            inv = pow(b[-1], p - 2, p)
            while len(a) >= len(b):
                q = a[-1] * inv % p
                if q:
                    off = len(a) - len(b)
                    for i, c in enumerate(b):
                        a[i + off] = (a[i + off] - q * c) % p
                a.pop()
                while a and a[-1] == 0:
                    a.pop()
            a, b = b, a
        return len(a) == 1 if a else False
    return False


def zz_sylvester(f, g):
    """Sylvester matrix of f, g as rows of int lists (degree high first)."""
    m, n = len(f) - 1, len(g) - 1
    w = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (w - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (w - n - 1 - i))
    return rows


def int_bareiss_det(rows):
    """Fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def zz_resultant(f, g):
    """Resultant of f, g in Z[x] (0 on a common factor)."""
    if not f or not g:
        return 0
    if len(f) == 1:
        return f[0] ** (len(g) - 1)
    if len(g) == 1:
        return g[0] ** (len(f) - 1)
    return int_bareiss_det(zz_sylvester(f, g))


def zz_sturm_chain(f):
    """Canonical Sturm sequence, each element primitive with sign preserved."""
    chain = [zz_primitive(f)]
    d = zz_diff(f)
    if d:
        chain.append(zz_primitive(d))
    while chain[-1] and len(chain[-1]) > 1:
        r = zz_prem(chain[-2], chain[-1])
        # zz_prem scales by lc(g)^k which may be negative; renormalize so the
        # scaling factor is positive, then negate per the Sturm recurrence.
        k = len(chain[-2]) - len(chain[-1]) + 1
        if chain[-1][-1] < 0 and k % 2 == 1:
            r = zz_neg(r)
        r = zz_neg(zz_primitive(r))
        if not r:
            break
        chain.append(r)
    return chain


def zz_variations_at(chain, x: Fraction) -> int:
    signs = []
    for f in chain:
        s = zz_sign_at(f, x)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def zz_count_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi], endpoints assumed non-roots of chain[0]."""
    return zz_variations_at(chain, lo) - zz_variations_at(chain, hi)


def zz_root_bound(f) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return 1 + Fraction(m, lc)


def zz_squarefree_decomposition(f):
    """Yun's algorithm over Z[x]: list of (primitive factor, multiplicity)."""
    f = zz_primitive(f)
    if len(f) <= 1:
        return []
    out = []
    g = zz_gcd(f, zz_diff(f))
    if len(g) == 1:
        return [(f if f[-1] > 0 else zz_neg(f), 1)]
    c = zz_div_exact(f, g)
    d = zz_sub(zz_div_exact(zz_diff(f), g), zz_diff(c))
    k = 1
    while True:
        p = zz_gcd(c, d)
        if len(p) > 1:
            out.append((p, k))
        c2 = zz_div_exact(c, p)
        if len(c2) == 1:
            break
        d = zz_sub(zz_div_exact(d, p), zz_diff(c2))
        c = c2
        k += 1
    return out


def zz_squarefree_part(f):
    parts = zz_squarefree_decomposition(f)
    out = [1]
    for p, _ in parts:
        out = zz_mul(out, p)
    return out


# ---------------------------------------------------------------------------
# zzx: Z[a][x] -- lists of zz polynomials, low x-degree first
# ---------------------------------------------------------------------------

def zzx_strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def zzx_degree(f):
    return len(f) - 1


def zzx_neg(f):
    return [zz_neg(c) for c in f]


def zzx_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = [list(c) for c in f]
    for i, c in enumerate(g):
        out[i] = zz_add(out[i], c)
    return zzx_strip(out)


def zzx_sub(f, g):
    out = [list(c) for c in f] + [[] for _ in range(max(0, len(g) - len(f)))]
    for i, c in enumerate(g):
        out[i] = zz_sub(out[i], c)
    return zzx_strip(out)


def zzx_mul(f, g):
    if not f or not g:
        return []
    out = [[] for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = zz_add(out[i + j], zz_mul(a, b))
    return zzx_strip(out)


def zzx_scale(f, c):
    """Multiply by a zz polynomial in the inner parameter."""
    if not c:
        return []
    return zzx_strip([zz_mul(a, c) for a in f])


def zzx_diff_x(f):
    return [zz_scale(c, i) for i, c in enumerate(f)][1:]


def zzx_content(f):
    c = []
    for a in f:
        if a:
            c = zz_gcd(c, a)
            if len(c) == 1 and c[0] == 1:
                return c
    return c


def zzx_primitive(f):
    if not f:
        return []
    c = zzx_content(f)
    if len(c) == 1 and c[0] == 1:
        return [list(a) for a in f]
    return [zz_div_exact(a, c) if a else [] for a in f]


def zzx_specialize(f, a: Fraction):
    """Specialize the inner parameter at a rational point -> list of Fractions."""
    return [zz_eval_rat(c, a) for c in f]


def zzx_inner_degree(f):
    return max((len(c) - 1 for c in f if c), default=-1)


def poly_bareiss_det(rows):
    """Fraction-free determinant of a square matrix with zz entries."""
    a = [[list(e) for e in r] for r in rows]
    n = len(a)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = zz_sub(zz_mul(a[i][j], pivot), zz_mul(a[i][k], a[k][j]))
                a[i][j] = zz_div_exact(t, prev) if t else []
            a[i][k] = []
        prev = pivot
    out = a[n - 1][n - 1]
    return zz_neg(out) if sign < 0 else out


def zzx_determinant_polynomial(rows, width):
    """Determinant polynomial of r row vectors of length `width` over Z[a].

    Rows list coefficients of polynomials of degree < width in x, HIGHEST
    degree first.  Returns sum_t det(cols 0..r-2, col r-1+t) * x^(width-r-t)
    as a zzx polynomial (low degree first).
    """
    r = len(rows)
    if r == 0:
        return [[1]]
    out = [[] for _ in range(width - r + 1)]
    base_cols = list(range(r - 1))
    for t in range(width - r + 1):
        cols = base_cols + [r - 1 + t]
        minor = [[row[c] for c in cols] for row in rows]
        d = poly_bareiss_det(minor)
        out[width - r - t] = d
    return zzx_strip(out)


def _zzx_sylvester_rows(f, g):
    m, n = zzx_degree(f), zzx_degree(g)
    w = m + n
    fr = list(reversed(f))
    gr = list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([[] for _ in range(i)] + fr + [[] for _ in range(w - m - 1 - i)])
    for i in range(m):
        rows.append([[] for _ in range(i)] + gr + [[] for _ in range(w - n - 1 - i)])
    return rows, w


def zzx_resultant(f, g):
    """Resultant with respect to x of f, g in Z[a][x] -> zz in Z[a]."""
    f, g = zzx_strip(list(f)), zzx_strip(list(g))
    if not f or not g:
        return []
    m, n = zzx_degree(f), zzx_degree(g)
    if m == 0:
        out = [1]
        for _ in range(n):
            out = zz_mul(out, f[0])
        return out
    if n == 0:
        out = [1]
        for _ in range(m):
            out = zz_mul(out, g[0])
        return out
    rows, _ = _zzx_sylvester_rows(f, g)
    return poly_bareiss_det(rows)


def zzx_subresultant(f, g, j):
    """The j-th determinantal subresultant S_j(f, g) in Z[a][x].

    Valid for 0 <= j < min(deg f, deg g).  Specializing the inner parameter
    commutes with this construction as long as both leading coefficients
    survive the specialization.
    """
    m, n = zzx_degree(f), zzx_degree(g)
    if not (0 <= j < min(m, n)):
        raise ValueError("subresultant index out of range")
    w = m + n - j
    fr = list(reversed(f))
    gr = list(reversed(g))
    rows = []
    for i in range(n - j):
        rows.append([[] for _ in range(i)] + fr + [[] for _ in range(w - m - 1 - i)])
    for i in range(m - j):
        rows.append([[] for _ in range(i)] + gr + [[] for _ in range(w - n - 1 - i)])
    return zzx_determinant_polynomial(rows, w)
