"""Prototype: 8 generic rational points -> pencil of cubics -> W.

Validates the Sylvester-Jacobian eliminant identity, evaluation-interpolation
of the pencil discriminant, and subresultant node localization, before these
are productized.  Expected: 12 complex nodal members, 8 real, all signs +1.
"""
import random
from fractions import Fraction as F

from welschinger.exact import intkernel as ik
from welschinger.exact.poly import UniPoly, interpolate
from welschinger.exact.roots import isolate_real_roots

# ---- ternary forms as dict (i,j,k)->int --------------------------------

def form_diff(f, var):
    out = {}
    for (i, j, k), c in f.items():
        e = (i, j, k)[var]
        if e:
            key = tuple(v - (1 if t == var else 0) for t, v in enumerate((i, j, k)))
            out[key] = out.get(key, 0) + e * c
    return out

def form_mul(f, g):
    out = {}
    for kf, a in f.items():
        for kg, b in g.items():
            k = tuple(x + y for x, y in zip(kf, kg))
            out[k] = out.get(k, 0) + a * b
    return {k: c for k, c in out.items() if c}

def form_add(f, g):
    out = dict(f)
    for k, c in g.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}

def form_scale(f, c):
    return {k: c * v for k, v in f.items()} if c else {}

QBASIS = [(2,0,0),(0,2,0),(0,0,2),(0,1,1),(1,0,1),(1,1,0)]

def quad_vector(q):
    return [q.get(k, 0) for k in QBASIS]

def jacobian_det(p, q, r):
    grads = [[form_diff(f, v) for v in range(3)] for f in (p, q, r)]
    total = {}
    import itertools
    for perm in itertools.permutations(range(3)):
        sign = 1
        seen = list(perm)
        # parity
        inv = sum(1 for a in range(3) for b in range(a+1,3) if seen[a] > seen[b])
        sign = -1 if inv % 2 else 1
        prod = {(0,0,0): sign}
        for row in range(3):
            prod = form_mul(prod, grads[row][perm[row]])
        total = form_add(total, prod)
    return total

def eliminant(cubic):
    """512 * Res(F_x, F_y, F_z) via the Jacobian determinant formula."""
    p, q, r = (form_diff(cubic, v) for v in range(3))
    j = jacobian_det(p, q, r)
    rows = [quad_vector(p), quad_vector(q), quad_vector(r)]
    for v in range(3):
        rows.append(quad_vector(form_diff(j, v)))
    return ik.int_bareiss_det(rows)

# ---- check vs Weierstrass -----------------------------------------------
def weier(a, b):
    # y^2 z - x^3 - a x z^2 - b z^3
    return {(0,2,1):1, (3,0,0):-1, (1,0,2):-a, (0,0,3):-b}

vals = []
for (a, b) in [(1,1),(2,3),(-1,5),(0,1),(1,0),(7,-2)]:
    e = eliminant(weier(a, b))
    d = 4*a**3 + 27*b**2
    vals.append((e, d, F(e, d) if d else None))
print("weierstrass ratios:", [v[2] for v in vals])

# ---- 8 point pipeline ----------------------------------------------------
rng = random.Random(7)
MON3 = [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)]

def kernel_basis(points):
    rows = []
    for (px, py) in points:
        rows.append([px**i * py**j for (i, j, k) in MON3])
    # Gauss over Fractions
    m = [list(map(F, row)) for row in rows]
    ncols = len(MON3)
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [v / m[r][c] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [F(0)] * ncols
        v[fc] = F(1)
        for rr, pc in enumerate(piv_cols):
            v[pc] = -m[rr][fc]
        basis.append(v)
    return basis, len(piv_cols)

pts = []
while len(pts) < 8:
    p = (F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
    if p not in pts:
        pts.append(p)

basis, rank = kernel_basis(pts)
print("rank:", rank, "kernel dim:", len(basis))

def vec_to_form(v):
    den = 1
    from math import gcd
    for c in v:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints] if g > 1 else ints
    return {m: c for m, c in zip(MON3, ints) if c}

F0 = vec_to_form(basis[0])
F1 = vec_to_form(basis[1])
if eliminant(F1) == 0:
    F1 = form_add(F1, F0)
assert eliminant(F1) != 0

# discriminant by interpolation
samples = []
lam = -24
while len(samples) < 30:
    member = form_add(F0, form_scale(F1, lam))
    samples.append((F(lam), F(eliminant(member))))
    lam += 1
disc = interpolate(samples[:13], 12)
for (a, b) in samples[13:]:
    assert disc(a) == b, "degree > 12?!"
dz = disc.to_zz_primitive()
print("disc degree:", len(dz) - 1)
sq = ik.zz_gcd(dz, ik.zz_diff(dz))
print("squarefree:", len(sq) == 1)

roots = isolate_real_roots(UniPoly.from_zz(dz))
print("real roots:", len(roots))

# ---- per root node analysis ---------------------------------------------
# member affine polys over Z[lam]: dict (i,j) -> [c0, c1] (lam-poly)
def affine(gform):
    out = {}
    for (i, j, k), c in gform.items():
        out[(i, j)] = out.get((i, j), [0, 0])
        # placeholder; filled below
    return out

def member_bipoly():
    """G(lam; x, y) coefficients as zz lam-polys."""
    out = {}
    for (i, j, k), c in F0.items():
        out.setdefault((i, j), [0, 0])[0] += c
    for (i, j, k), c in F1.items():
        out.setdefault((i, j), [0, 0])[1] += c
    return {k: ik.zz_strip(v) for k, v in out.items() if ik.zz_strip(list(v))}

G = member_bipoly()

def bip_diff(g, var):
    out = {}
    for (i, j), c in g.items():
        e = (i, j)[var]
        if e:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            cur = out.get(key, [])
            out[key] = ik.zz_add(cur, ik.zz_scale(c, e))
    return out

def bip_euler_z(g, deg=3):
    # G_z on z=1: (deg - i - j) * coeff
    out = {}
    for (i, j), c in g.items():
        m = deg - i - j
        if m:
            out[(i, j)] = ik.zz_scale(c, m)
    return out

Gx, Gy, Gz = bip_diff(G, 0), bip_diff(G, 1), bip_euler_z(G)

def bip_spec(g, lam):
    """specialize lam -> Fraction; returns dict (i,j)->Fraction"""
    return {k: ik.zz_eval_rat(c, lam) for k, c in g.items()}

def res_y_interp(gA, gB, degbound):
    """Res_y(gA, gB) in Z[lam][x] via lam-interpolation -> zzx (outer x, inner lam)."""
    needed = degbound + 3
    dyA = max(j for (_, j) in gA)
    dyB = max(j for (_, j) in gB)
    lam = -(needed // 2 + 1)
    count = 0
    lams = []
    vals = []
    while count < needed:
        A = bip_spec(gA, F(lam)); B = bip_spec(gB, F(lam))
        A = {k: v for k, v in A.items() if v}
        B = {k: v for k, v in B.items() if v}
        # skip samples where the y-degree drops (resultant would not specialize)
        if max((j for (_, j) in A), default=-1) != dyA or \
           max((j for (_, j) in B), default=-1) != dyB:
            lam += 1
            continue
        # build as poly in y over Z[x]
        def to_zzx_y(d):
            dy = max(j for (_, j) in d)
            out = [[0]* (max(i for (i, _) in d) + 1) for _ in range(dy + 1)]
            for (i, j), c in d.items():
                out[j][i] = int(c)
            return ik.zzx_strip([ik.zz_strip(r) for r in out])
        ra = to_zzx_y(A); rb = to_zzx_y(B)
        r = ik.zzx_resultant(ra, rb)  # zz in x
        lams.append(F(lam)); vals.append(r)
        lam += 1; count += 1
    xdeg = max(len(v) - 1 for v in vals)
    # interpolate each x-coefficient in lam
    coeffs = []
    for i in range(xdeg + 1):
        pts = [(l, F(v[i] if i < len(v) else 0)) for l, v in zip(lams, vals)]
        c = interpolate(pts, degbound)
        coeffs.append(c.to_zz()[0])  # should be integral
    return ik.zzx_strip(coeffs)

A = res_y_interp(Gx, Gy, 4)
B = res_y_interp(Gx, Gz, 4)
S1x = ik.zzx_subresultant(A, B, 1)
S0x = ik.zzx_resultant(A, B)

def res_x_interp(gA, gB, degbound):
    sw = lambda d: {(j, i): c for (i, j), c in d.items()}
    return res_y_interp(sw(gA), sw(gB), degbound)

D = res_x_interp(Gx, Gy, 4)
E = res_x_interp(Gx, Gz, 4)
S1y = ik.zzx_subresultant(D, E, 1)

t0, t1 = (S1x + [[], []])[0], (S1x + [[], []])[1]
u0, u1 = (S1y + [[], []])[0], (S1y + [[], []])[1]

def subst_num(g, t0, t1, u0, u1, dx, dy):
    """numerator of g(-t0/t1, -u0/u1) * t1^dx * u1^dy, zz in lam"""
    acc = []
    nt0 = ik.zz_neg(t0); nu0 = ik.zz_neg(u0)
    for (i, j), c in g.items():
        term = list(c)
        for _ in range(i): term = ik.zz_mul(term, nt0)
        for _ in range(dx - i): term = ik.zz_mul(term, t1)
        for _ in range(j): term = ik.zz_mul(term, nu0)
        for _ in range(dy - j): term = ik.zz_mul(term, u1)
        acc = ik.zz_add(acc, term)
    return acc

Gxx, Gxy, Gyy = bip_diff(Gx, 0), bip_diff(Gx, 1), bip_diff(Gy, 1)
hess = {}
# H = Gxx*Gyy - Gxy^2 as bipoly over Z[lam]
def bip_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = ik.zz_add(out.get(k, []), ik.zz_mul(c1, c2))
    return {k: v for k, v in out.items() if v}

def bip_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = ik.zz_sub(out.get(k, []), c)
    return {k: v for k, v in out.items() if v}

H = bip_sub(bip_mul(Gxx, Gyy), bip_mul(Gxy, Gxy))

hnum = subst_num(H, t0, t1, u0, u1, 2, 2)  # once per pencil
signs = []
for r in roots:
    assert r.sign_of(t1) != 0, "gcd degree != 1 (wall)"
    assert r.sign_of(u1) != 0
    sh = r.sign_of(hnum)
    assert sh != 0, "degenerate node"
    # denominators appear to even powers: sign(H) = sign(hnum)
    signs.append(-1 if sh > 0 else 1)

print("signs:", signs)
print("W =", sum(signs), " complex count =", len(dz) - 1)
