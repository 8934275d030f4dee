"""Independent reference computations used only by the tests.

None of these import the package's linear algebra or Groebner engines.
"""

from itertools import combinations, combinations_with_replacement

import sympy


def egcd_inverse(a, p):
    """Inverse by the extended Euclidean algorithm."""
    r0, r1, s0, s1 = p, a % p, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(a)
    return s0 % p


def rank_mod_p(rows, p):
    """Row-by-row Gaussian elimination on lists of Python ints."""
    rows = [[x % p for x in r] for r in rows]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = egcd_inverse(rows[rk][c], p)
        rows[rk] = [x * inv % p for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def monomials(nvars, d):
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _mul(f, u):
    return {tuple(a + b for a, b in zip(m, u)): c for m, c in f.items()}


def h1_bruteforce(polys, nvars, p, d):
    """dim syz_d - dim tsyz_d with polynomials as {exponent tuple: coeff}."""
    degs = [sum(next(iter(f))) for f in polys]
    m = len(polys)
    # syzygies: kernel of (a_1..a_m) -> sum a_i f_i, coordinates a_i in R_{d-d_i}
    cols = [(i, u) for i in range(m) for u in monomials(nvars, d - degs[i])]
    target = monomials(nvars, d)
    if not cols:
        return 0
    mat = [[0] * len(cols) for _ in target]
    tindex = {t: k for k, t in enumerate(target)}
    for j, (i, u) in enumerate(cols):
        for mono, c in _mul(polys[i], u).items():
            mat[tindex[mono]][j] = (mat[tindex[mono]][j] + c) % p
    syz = len(cols) - (rank_mod_p(mat, p) if target else 0)
    cindex = {c: k for k, c in enumerate(cols)}
    vecs = []
    for a, b in combinations(range(m), 2):
        for u in monomials(nvars, d - degs[a] - degs[b]):
            v = [0] * len(cols)
            for mono, c in _mul(polys[a], u).items():
                v[cindex[(b, mono)]] += c
            for mono, c in _mul(polys[b], u).items():
                v[cindex[(a, mono)]] -= c
            vecs.append(v)
    triv = rank_mod_p(vecs, p) if vecs else 0
    return syz - triv


def poly_to_dict(f):
    return {m: c for m, c in f.terms}


def sympy_reduced_gb(F):
    """Reduced grevlex basis from sympy, as a set of {monomial: residue} items."""
    ring = F[0].ring
    names = list(ring.var_names)
    gens = sympy.symbols(names)
    exprs = []
    for f in F:
        e = 0
        for m, c in f.terms:
            term = sympy.Integer(c)
            for g, k in zip(gens, m):
                term *= g ** k
            e += term
        exprs.append(e)
    G = sympy.groebner(exprs, *gens, modulus=ring.p, order="grevlex")
    out = set()
    for g in G.exprs:
        P = sympy.Poly(g, *gens, modulus=ring.p)
        lc = int(P.LC(order="grevlex")) % ring.p
        inv = egcd_inverse(lc, ring.p)
        out.add(frozenset((tuple(m), int(c) % ring.p * inv % ring.p) for m, c in P.terms()))
    return out


def as_frozen(G):
    return {frozenset(g.terms) for g in G}


def standard_count(lms, nvars, d):
    return sum(1 for t in monomials(nvars, d)
               if not any(all(a <= b for a, b in zip(g, t)) for g in lms))
