"""Truncated Hilbert-Poincare series of semi-regular sequences.

All arithmetic is on Python ints, so binomial growth never overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidDegree, NotArtinian
from .polyring import mono_divides, monomials_of_degree

BY_BRACKET = "bracket"
BY_PRECISION = "precision"

INFINITE = math.inf


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficient prefix c_0..c_k of an integer power series.

    ``truncation`` is ``"bracket"`` when the [.] rule fired (all stored
    coefficients positive, the next one <= 0) and ``"precision"`` when the
    prefix simply stops at the requested bound.
    """

    coeffs: tuple
    truncation: str

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def to_dict(self):
        return {"coeffs": list(self.coeffs), "truncation": self.truncation}


def _check_degrees(degrees):
    degrees = tuple(int(d) for d in degrees)
    for d in degrees:
        if d < 1:
            raise InvalidDegree(f"generator degrees must be >= 1, got {d}")
    return degrees


def series_coefficients(n, degrees, precision, extra_denominator=0):
    """Coefficients 0..precision of prod(1 - z^d_j) / (1 - z)^(n + extra)."""
    degrees = _check_degrees(degrees)
    c = [0] * (precision + 1)
    c[0] = 1
    for d in degrees:
        for k in range(precision, d - 1, -1):
            c[k] -= c[k - d]
    # each division by (1 - z) is one prefix-sum pass
    for _ in range(n + extra_denominator):
        for k in range(1, precision + 1):
            c[k] += c[k - 1]
    return c


def default_precision(n, degrees):
    """A precision at which the bracket must have fired when m >= n."""
    degrees = sorted(degrees, reverse=True)
    if len(degrees) >= n:
        return max(sum(degrees[:n]) - n + 1, 1)
    return max(sum(degrees) + n + 1, 1)


def bracket(coeffs):
    """Keep the maximal prefix of strictly positive coefficients."""
    out = []
    for c in coeffs:
        if c <= 0:
            return tuple(out), True
        out.append(c)
    return tuple(out), False


def semiregular_series(n, degrees, precision=None) -> TruncatedSeries:
    """[prod_j (1 - z^d_j) / (1 - z)^n], or its prefix up to ``precision``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    degrees = _check_degrees(degrees)
    if precision is None:
        precision = default_precision(n, degrees)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs, fired = bracket(series_coefficients(n, degrees, precision + 1))
    if fired:
        return TruncatedSeries(coeffs, BY_BRACKET)
    return TruncatedSeries(coeffs[:precision + 1], BY_PRECISION)


def degree_of_regularity(n, degrees, bound=None):
    """Index of the first non-positive coefficient of prod(1-z^d)/(1-z)^n;
    ``math.inf`` if none occurs at or below ``bound``."""
    s = semiregular_series(n, degrees, bound)
    if s.truncation == BY_BRACKET and (bound is None or len(s.coeffs) <= bound):
        return len(s.coeffs)
    return INFINITE


def homogenized_prefix(n, degrees) -> TruncatedSeries:
    """First D coefficients of prod(1 - z^d_i) / (1 - z)^(n+1), D the degree of
    regularity of the semi-regular shape (n, degrees)."""
    D = degree_of_regularity(n, degrees)
    if D == INFINITE:
        raise NotArtinian(
            f"shape n={n}, degrees={tuple(degrees)} has no finite degree of regularity")
    c = series_coefficients(n, degrees, D - 1, extra_denominator=1)
    return TruncatedSeries(tuple(c), BY_PRECISION)


def cumulative(coeffs):
    out, s = [], 0
    for c in coeffs:
        s += c
        out.append(s)
    return tuple(out)


def macaulay_bound(n, degrees):
    """d_1 + ... + d_l - l + 1 with l = min(m, n + 1), degrees sorted descending."""
    degrees = sorted(_check_degrees(degrees), reverse=True)
    ell = min(len(degrees), n + 1)
    return sum(degrees[:ell]) - ell + 1


# ---------------------------------------------------------------------------
# staircase oracles for monomial ideals


def hf_from_staircase(lms, n, d):
    """Number of degree-d monomials in n variables divisible by no element of lms."""
    lms = [tuple(m) for m in lms]
    return sum(1 for t in monomials_of_degree(n, d)
               if not any(mono_divides(g, t) for g in lms))


def standard_monomials(lms, n, d):
    lms = [tuple(m) for m in lms]
    return [t for t in monomials_of_degree(n, d)
            if not any(mono_divides(g, t) for g in lms)]


def minimalize_monomials(lms):
    lms = sorted(set(tuple(m) for m in lms), key=sum)
    out = []
    for m in lms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def hilbert_numerator(lms, n):
    """Numerator N(z) (list of ints) with HS_{R/<lms>}(z) = N(z) / (1 - z)^n.

    Uses N(I + <m>) = N(I) - z^deg(m) N(I : m) on the minimal generators.
    """
    gens = minimalize_monomials(lms)
    return _numerator(tuple(gens), n)


def _poly_sub_shift(a, b, s):
    out = list(a) + [0] * max(0, len(b) + s - len(a))
    for i, c in enumerate(b):
        out[i + s] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _numerator(gens, n):
    if not gens:
        return [1]
    # coprime (pairwise disjoint support) generators: product of (1 - z^deg)
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    used = set()
    disjoint = True
    for s in supports:
        if used & s:
            disjoint = False
            break
        used |= s
    if disjoint:
        out = [1]
        for g in gens:
            out = _poly_sub_shift(out, out, sum(g))
        return out
    *rest, last = gens
    base = _numerator(tuple(rest), n)
    colon = minimalize_monomials(
        tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest)
    return _poly_sub_shift(base, _numerator(tuple(colon), n), sum(last))


def hilbert_series_from_numerator(num, n, precision):
    c = list(num[:precision + 1]) + [0] * max(0, precision + 1 - len(num))
    for _ in range(n):
        for k in range(1, precision + 1):
            c[k] += c[k - 1]
    return c
