"""Graded Koszul homology and the semi-regularity tests built on it.

Every graded piece is handled through explicit monomial bases, so the sizes
grow binomially.  Inputs are capped at n <= 6 variables, m <= 10 generators
and degree <= 12.  The degree cap can be changed through the environment
variable ``SEMIGB_DEGREE_CAP``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .buchberger import buchberger
from .errors import (
    CapExceeded, ModulusMismatch, NoFallWithinCap, NotArtinianWithinCap,
    NotHomogeneous, PreconditionUnverified,
)
from .linalg import MatrixGF, kernel_dim, rank
from .polyring import PolySequence, as_sequence, mono_mul, reduce
from .series import (
    INFINITE, hf_from_staircase, hilbert_numerator, series_coefficients,
    standard_monomials,
)

MAX_VARS = 6
MAX_GENS = 10
DEFAULT_DEGREE_CAP = 12

METHODS = ("direct", "series", "homology")


def degree_cap() -> int:
    raw = os.environ.get("SEMIGB_DEGREE_CAP")
    return int(raw) if raw else DEFAULT_DEGREE_CAP


def _check_caps(F, d=None):
    ring = F.ring
    if ring.nvars > MAX_VARS:
        raise CapExceeded(f"{ring.nvars} variables exceed the cap {MAX_VARS}", "n")
    if len(F) > MAX_GENS:
        raise CapExceeded(f"{len(F)} generators exceed the cap {MAX_GENS}", "m")
    if d is not None and d > degree_cap():
        raise CapExceeded(f"degree {d} exceeds the cap {degree_cap()}", "degree")


def _homogeneous(F):
    F = as_sequence(F)
    if not F.is_homogeneous():
        raise NotHomogeneous("Koszul computations need a homogeneous sequence")
    _check_caps(F)
    return F


# ---------------------------------------------------------------------------
# Koszul differentials


@dataclass
class GradedMapMatrix:
    """(phi_i)_d : K_i -> K_{i-1} in degree d.

    Columns are indexed by (J, u) with |J| = i and deg u = d - d_J, rows by
    (J', v) with |J'| = i - 1.  ``source_shifts``/``target_shifts`` list d_J
    per summand.
    """

    i: int
    degree: int
    source_shifts: list
    target_shifts: list
    matrix: MatrixGF

    @property
    def source_dim(self):
        return self.matrix.cols

    @property
    def target_dim(self):
        return self.matrix.rows


def _summands(F, i, d):
    """Basis of (K_i)_d as (J, monomial list) blocks plus their offsets."""
    blocks, offsets, total = [], {}, 0
    for J in combinations(range(len(F)), i):
        shift = sum(F.degrees[j] for j in J)
        monos = F.ring.monomials(d - shift) if d >= shift else ()
        offsets[J] = total
        blocks.append((J, shift, monos))
        total += len(monos)
    return blocks, offsets, total


def koszul_map(F, i, d) -> GradedMapMatrix:
    """Matrix of the i-th Koszul differential in degree d, 1 <= i <= m."""
    F = _homogeneous(F)
    _check_caps(F, d)
    if not 1 <= i <= len(F):
        raise ValueError(f"Koszul index must lie in 1..{len(F)}, got {i}")
    src, _, ncols = _summands(F, i, d)
    tgt, toff, nrows = _summands(F, i - 1, d)
    index = {}
    for J, _, monos in tgt:
        index[J] = {m: toff[J] + k for k, m in enumerate(monos)}
    A = np.zeros((nrows, ncols), dtype=np.int64)
    p = F.ring.p
    col = 0
    for J, _, monos in src:
        for u in monos:
            for k, j in enumerate(J):
                sign = 1 if k % 2 == 0 else p - 1
                rest = J[:k] + J[k + 1:]
                rows = index[rest]
                for m, c in F[j].terms:
                    A[rows[mono_mul(m, u)], col] += sign * c
            col += 1
    return GradedMapMatrix(i, d, [b[1] for b in src], [b[1] for b in tgt],
                           MatrixGF(A, p))


def h1_dimension(F, d) -> int:
    """dim H_1(K(F))_d = dim ker (phi_1)_d - rank (phi_2)_d."""
    F = _homogeneous(F)
    ker = kernel_dim(koszul_map(F, 1, d).matrix)
    if len(F) < 2:
        return ker
    return ker - rank(koszul_map(F, 2, d).matrix)


def hm_vanishes(F, d) -> bool:
    """H_m(K)_d = 0, i.e. (phi_m)_d is injective."""
    F = _homogeneous(F)
    M = koszul_map(F, len(F), d).matrix
    return M.cols == 0 or rank(M) == M.cols


def first_nonzero_h1(F, cap=None):
    """min{d : H_1(K)_d != 0}, or INFINITE if none up to ``cap``."""
    F = _homogeneous(F)
    cap = degree_cap() if cap is None else cap
    for d in range(min(F.degrees), cap + 1):
        if h1_dimension(F, d):
            return d
    return INFINITE


# ---------------------------------------------------------------------------
# d-regularity


def _prefix_bases(F):
    """Reduced Groebner bases of <f_1..f_i> for i = 0..m (i = 0 is empty)."""
    out = [[]]
    for i in range(1, len(F) + 1):
        out.append(buchberger(PolySequence(F.polys[:i])).elements)
    return out


def _multiplication_rank(f, G, s, t):
    """Rank and source size of x f : (R/<G>)_s -> (R/<G>)_t on standard monomials."""
    ring = f.ring
    lms = [g.LM for g in G]
    src = standard_monomials(lms, ring.nvars, s)
    tgt = {m: k for k, m in enumerate(standard_monomials(lms, ring.nvars, t))}
    if not src:
        return 0, 0
    A = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for col, u in enumerate(src):
        h = reduce(f.mul_term(u), G) if G else f.mul_term(u)
        for m, c in h.terms:
            A[tgt[m], col] = c
    if not tgt:
        return 0, len(src)
    return rank(MatrixGF(A, ring.p)), len(src)


def _direct(F, d, prefixes=None):
    prefixes = prefixes or _prefix_bases(F)
    for i, f in enumerate(F):
        for t in range(f.degree, d):
            r, size = _multiplication_rank(f, prefixes[i], t - f.degree, t)
            if r != size:
                return False
    return True


def _series(F, d, G=None):
    G = G if G is not None else buchberger(F).elements
    lms = [g.LM for g in G]
    n = F.ring.nvars
    expected = series_coefficients(n, F.degrees, max(d - 1, 0))
    return all(hf_from_staircase(lms, n, t) == expected[t] for t in range(d))


def _homology(F, d):
    return all(h1_dimension(F, t) == 0 for t in range(d))


def check_d_regular(F, d, method="direct") -> bool:
    """Whether F is d-regular, by one of three equivalent tests.

    ``direct``: x f_i is injective on (R/<f_1..f_{i-1}>)_{t-d_i} for d_i <= t < d.
    ``series``: HF of R/<F> matches prod(1 - z^d_j)/(1 - z)^n below d.
    ``homology``: H_1(K)_t = 0 for t < d.
    """
    F = _homogeneous(F)
    _check_caps(F, d)
    if method == "direct":
        return _direct(F, d)
    if method == "series":
        return _series(F, d)
    if method == "homology":
        return _homology(F, d)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def regularity_degree(G, nvars, cap=None):
    """d_reg = min{d : every degree-d monomial lies in <LM(G)>}."""
    lms = [g.LM for g in G]
    cap = degree_cap() if cap is None else cap
    for v in range(nvars):
        if not any(all(e == 0 for k, e in enumerate(m) if k != v) for m in lms):
            raise NotArtinianWithinCap(
                f"no pure power of variable {v + 1} among the leading monomials; "
                "the quotient is not Artinian", "degree")
    for d in range(cap + 1):
        if hf_from_staircase(lms, nvars, d) == 0:
            return d
    raise NotArtinianWithinCap(f"quotient does not vanish up to degree {cap}", "degree")


def check_crypto_semiregular(F, method="series"):
    """(is cryptographic semi-regular, d_reg of <F>)."""
    F = _homogeneous(F)
    G = buchberger(F).elements
    D = regularity_degree(G, F.ring.nvars)
    if method == "series":
        return _series(F, D, G), D
    return check_d_regular(F, D, method), D


# ---------------------------------------------------------------------------
# Pardue semi-regularity


def _hf_from_numerator(num, n, t):
    from math import comb
    if n == 0:
        return num[t] if t < len(num) else 0
    return sum(c * comb(t - k + n - 1, n - 1) for k, c in enumerate(num) if k <= t)


def _artinian_top(num, n):
    """Largest t with HF(t) != 0 for an Artinian numerator, else None."""
    # N(z) / (1 - z)^n is a polynomial iff (1 - z)^n divides N
    q = list(num)
    for _ in range(n):
        if sum(q) != 0:
            return None
        # synthetic division by (1 - z)
        out, acc = [], 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out or [0]
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return len(q) - 1 if any(q) else -1


def check_pardue_semiregular(F) -> bool:
    """Every x f_i on A^(i-1) = R/<f_1..f_{i-1}> is injective or surjective in
    each degree.

    The test compares exact Hilbert numerators of the prefix ideals: either
    N_i = N_{i-1} (1 - z^d_i) (injective everywhere), or A^(i) is Artinian
    and its Hilbert function follows HF_{i-1}(t) - HF_{i-1}(t - d_i) up to its
    last nonzero degree (injective there, surjective beyond).
    """
    F = _homogeneous(F)
    n = F.ring.nvars
    prefixes = _prefix_bases(F)
    nums = [[1]] + [hilbert_numerator([g.LM for g in G], n) for G in prefixes[1:]]
    for i, f in enumerate(F):
        d = f.degree
        prev, cur = nums[i], nums[i + 1]
        expected = list(prev) + [0] * d
        for k, c in enumerate(prev):
            expected[k + d] -= c
        while len(expected) > 1 and expected[-1] == 0:
            expected.pop()
        if expected == list(cur):
            continue
        top = _artinian_top(cur, n)
        if top is None:
            return False
        for t in range(top + 1):
            want = _hf_from_numerator(prev, n, t) - _hf_from_numerator(prev, n, t - d)
            if _hf_from_numerator(cur, n, t) != want:
                return False
    return True


def dimension_lemma_terms(F, i, t):
    """The four terms of dim A^(i)_t = dim A^(i-1)_t - dim A^(i-1)_{t-d_i}
    + dim (0 : f_i)_{t-d_i}, each from a separate computation.

    A^(i)_t comes from the rank of the Macaulay slice, A^(i-1) from the
    staircase of a Groebner basis, and the annihilator from the kernel of
    multiplication on standard monomials.  ``i`` is 1-based.
    """
    from .macaulay import build_macaulay
    F = _homogeneous(F)
    _check_caps(F, t)
    ring, n = F.ring, F.ring.nvars
    f = F[i - 1]
    s = t - f.degree
    Fi = PolySequence(F.polys[:i])
    R_t = len(ring.monomials(t))
    if t >= min(Fi.degrees):
        lhs = R_t - rank(build_macaulay(Fi, t, cumulative=False).body)
    else:
        lhs = R_t
    G = buchberger(PolySequence(F.polys[:i - 1])).elements if i > 1 else []
    lms = [g.LM for g in G]
    a_t = hf_from_staircase(lms, n, t)
    a_s = hf_from_staircase(lms, n, s) if s >= 0 else 0
    if s >= 0:
        r, size = _multiplication_rank(f, G, s, t)
        ann = size - r
    else:
        ann = 0
    return lhs, a_t, a_s, ann


# ---------------------------------------------------------------------------
# first fall degree over B = R / <x_i^q>


def _b_monomials(ring, d, q):
    return [m for m in ring.monomials(d) if max(m, default=0) < q] if d >= 0 else []


def _truncate(f, q):
    return {m: c for m, c in f.terms if max(m, default=0) < q}


def _times(terms, u, q):
    out = {}
    for m, c in terms.items():
        mm = mono_mul(m, u)
        if max(mm, default=0) < q:
            out[mm] = c
    return out


def _power_terms(f, e, q):
    """f^e in B as a term dict."""
    p = f.ring.p
    acc = {f.ring.one_mono: 1}
    base = _truncate(f, q)
    for _ in range(e):
        nxt = {}
        for a, ca in acc.items():
            for b, cb in base.items():
                m = mono_mul(a, b)
                if max(m, default=0) < q:
                    nxt[m] = (nxt.get(m, 0) + ca * cb) % p
        acc = {m: c for m, c in nxt.items() if c}
    return acc


def _fall_dims(F, d, q, powers):
    """(dim syz(fbar)_d, dim tsyz+(fbar)_d) over B."""
    ring, p, m = F.ring, F.ring.p, len(F)
    degs = F.degrees
    fbar = [_truncate(f, q) for f in F]
    target = {u: k for k, u in enumerate(_b_monomials(ring, d, q))}
    blocks, off, total = [], [], 0
    for j in range(m):
        monos = _b_monomials(ring, d - degs[j], q)
        blocks.append({u: total + k for k, u in enumerate(monos)})
        off.append(total)
        total += len(monos)
    if total == 0:
        return 0, 0
    phi1 = np.zeros((max(len(target), 1), total), dtype=np.int64)
    for j in range(m):
        for u, col in blocks[j].items():
            for mm, c in _times(fbar[j], u, q).items():
                phi1[target[mm], col] = c
    syz = total - (rank(MatrixGF(phi1, p)) if target else 0)
    cols = []
    for a, b in combinations(range(m), 2):
        # fbar_a e_b - fbar_b e_a times u
        for u in _b_monomials(ring, d - degs[a] - degs[b], q):
            v = np.zeros(total, dtype=np.int64)
            for mm, c in _times(fbar[a], u, q).items():
                v[blocks[b][mm]] += c
            for mm, c in _times(fbar[b], u, q).items():
                v[blocks[a][mm]] -= c
            cols.append(v)
    for j in range(m):
        for u in _b_monomials(ring, d - q * degs[j], q):
            v = np.zeros(total, dtype=np.int64)
            for mm, c in _times(powers[j], u, q).items():
                v[blocks[j][mm]] += c
            cols.append(v)
    triv = rank(MatrixGF(np.array(cols).T, p)) if cols else 0
    return syz, triv


def first_fall_degree(F, q, cap=None) -> int:
    """Least d with syz(fbar)_d strictly larger than tsyz+(fbar)_d over
    B = F_q[x]/<x_1^q, ..., x_n^q>.  F must be defined over F_q."""
    F = _homogeneous(F)
    if F.ring.p != q:
        raise ModulusMismatch(f"sequence is over F_{F.ring.p}, not F_{q}")
    cap = degree_cap() if cap is None else cap
    powers = [_power_terms(f, q - 1, q) for f in F]
    # B vanishes above n(q - 1)
    top = min(cap, F.ring.nvars * (q - 1) + max(F.degrees))
    for d in range(min(F.degrees), top + 1):
        syz, triv = _fall_dims(F, d, q, powers)
        if syz > triv:
            return d
    raise NoFallWithinCap(f"no degree fall up to degree {top}", "degree")


def fall_consistency(F, q, cap=None):
    """Compare the first fall degree d with D = min{d : H_1(K)_d != 0}.

    If q > D then D >= d; if q > d then D <= d.  Returns (verdict, d, D) with
    verdict ``"equal"`` when q exceeds both and they agree, ``"contradiction"``
    when a one-sided implication fails, and ``"inconclusive"`` otherwise.
    """
    F = _homogeneous(F)
    cap = degree_cap() if cap is None else cap
    D = first_nonzero_h1(F, cap)
    try:
        d = first_fall_degree(F, q, cap)
    except NoFallWithinCap:
        d = INFINITE
    if q > D and not D >= d:
        return "contradiction", d, D
    if q > d and not D <= d:
        return "contradiction", d, D
    if q > D and q > d:
        return ("equal" if d == D else "contradiction"), d, D
    return "inconclusive", d, D


# ---------------------------------------------------------------------------
# prefixes and reports


def prefix_vanishing_check(F, D) -> bool:
    """Given H_1(K(F))_{<=D} = 0, every prefix (f_1..f_j) has H_1 = 0 up to D."""
    F = _homogeneous(F)
    _check_caps(F, D)
    if not all(h1_dimension(F, t) == 0 for t in range(D + 1)):
        raise PreconditionUnverified(f"H_1(K(F)) does not vanish up to degree {D}")
    for j in range(1, len(F)):
        Fj = PolySequence(F.polys[:j])
        if any(h1_dimension(Fj, t) for t in range(D + 1)):
            return False
    return True


@dataclass
class KoszulReport:
    degrees: list
    h1: dict = field(default_factory=dict)
    d_regular_up_to: float = 0
    is_crypto_semiregular: bool | None = None
    is_pardue_semiregular: bool | None = None
    d_reg_actual: float | None = None
    first_fall_degree: int | None = None

    def to_dict(self):
        def num(x):
            return "Infinite" if x == INFINITE else x
        return {
            "degrees": list(self.degrees),
            "h1": {str(k): v for k, v in self.h1.items()},
            "d_regular_up_to": num(self.d_regular_up_to),
            "is_crypto_semiregular": self.is_crypto_semiregular,
            "is_pardue_semiregular": self.is_pardue_semiregular,
            "d_reg_actual": num(self.d_reg_actual),
            "first_fall_degree": self.first_fall_degree,
        }


def koszul_report(F, dmax=None, q=None) -> KoszulReport:
    """H_1 dimensions for degrees 0..dmax and the semi-regularity verdicts.

    ``d_regular_up_to`` is the least degree with H_1 != 0 (F is d-regular
    exactly for d up to it), INFINITE if H_1 vanishes throughout.
    """
    F = _homogeneous(F)
    dmax = degree_cap() if dmax is None else dmax
    rep = KoszulReport(degrees=list(range(dmax + 1)))
    first = INFINITE
    for d in rep.degrees:
        rep.h1[d] = h1_dimension(F, d)
        if rep.h1[d] and first == INFINITE:
            first = d
    rep.d_regular_up_to = first
    try:
        rep.is_crypto_semiregular, rep.d_reg_actual = check_crypto_semiregular(F)
    except NotArtinianWithinCap:
        rep.is_crypto_semiregular, rep.d_reg_actual = False, INFINITE
    rep.is_pardue_semiregular = check_pardue_semiregular(F)
    if q is not None:
        try:
            rep.first_fall_degree = first_fall_degree(F, q)
        except NoFallWithinCap:
            rep.first_fall_degree = None
    return rep
