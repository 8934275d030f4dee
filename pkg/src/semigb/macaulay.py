"""Macaulay matrices, the Macaulay-matrix solving degree, and its cost estimate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, Decimal, localcontext

import numpy as np

from .buchberger import GroebnerBasis, StepLog, interreduce, is_groebner_basis_of, minimalize
from .errors import EmptyMatrix, InvalidExponent, NotReached
from .linalg import MatrixGF, rref
from .polyring import Polynomial, as_sequence, mono_mul
from .series import macaulay_bound


@dataclass
class MacaulayMatrix:
    """Rows (t, i) encode t*f_i; columns are monomials in descending order."""

    degree: int
    cumulative: bool
    row_labels: list
    col_labels: list
    body: MatrixGF

    @property
    def shape(self):
        return self.body.data.shape


def _columns(ring, d, cumulative):
    if cumulative:
        cols = []
        for t in range(d, -1, -1):
            cols.extend(ring.monomials(t))
        return cols
    return list(ring.monomials(d))


def build_macaulay(F, d, cumulative=True) -> MacaulayMatrix:
    """M_{<=d}(F) (``cumulative``) or the homogeneous slice M_d(F)."""
    F = as_sequence(F)
    ring = F.ring
    if d < min(F.degrees):
        raise EmptyMatrix(f"degree {d} is below every generator degree {F.degrees}")
    cols = _columns(ring, d, cumulative)
    index = {m: k for k, m in enumerate(cols)}
    labels, rows = [], []
    for i, f in enumerate(F):
        lo = 0 if cumulative else d - f.degree
        for s in range(lo, d - f.degree + 1):
            for t in reversed(ring.monomials(s)):
                row = np.zeros(len(cols), dtype=np.int64)
                for m, c in f.terms:
                    mm = mono_mul(m, t)
                    if mm in index:
                        row[index[mm]] = c
                labels.append((t, i))
                rows.append(row)
    if not rows:
        raise EmptyMatrix(f"no rows of degree {d}")
    body = MatrixGF(np.array(rows), ring.p)
    return MacaulayMatrix(d, cumulative, labels, cols, body)


def _row_polys(ring, A, pivots, cols):
    out = []
    for r in range(len(pivots)):
        nz = np.flatnonzero(A[r])
        out.append(Polynomial._from_clean(ring, {cols[k]: int(A[r, k]) for k in nz}))
    return out


def _extract(F, d, slice_cache):
    """Polynomials of the RREF rows of M_{<=d}(F)."""
    ring = F.ring
    if F.is_homogeneous():
        # M_{<=d} is block diagonal by degree; reuse per-degree eliminations
        polys = []
        for t in range(min(F.degrees), d + 1):
            if t not in slice_cache:
                M = build_macaulay(F, t, cumulative=False)
                R, piv = rref(M.body)
                slice_cache[t] = _row_polys(ring, R.data, piv, M.col_labels)
            polys.extend(slice_cache[t])
        return polys
    M = build_macaulay(F, d, cumulative=True)
    R, piv = rref(M.body)
    return _row_polys(ring, R.data, piv, M.col_labels)


def macaulay_gb(F, dmax=None):
    """Smallest d whose RREF of M_{<=d}(F) contains a Groebner basis of <F>.

    Returns (reduced GroebnerBasis, sd_mac).  The GB test uses Buchberger's
    criterion on the rows with minimal leading monomials plus membership of
    every f_i, so it does not consult any other engine.
    """
    F = as_sequence(F)
    if dmax is None:
        n = F.ring.n
        dmax = macaulay_bound(n + 1, F.degrees) + 2
    cache = {}
    log = StepLog()
    candidate = []
    for d in range(min(F.degrees), dmax + 1):
        rows = _extract(F, d, cache)
        candidate = minimalize(rows)
        rec = log.record(d)
        rec.pairs = len(rows)
        rec.new_elements = len(candidate)
        log.steps.append(d)
        if candidate and is_groebner_basis_of(candidate, F):
            log.highest_step_degree = d
            return GroebnerBasis(interreduce(candidate), F.ring, log=log), d
    raise NotReached(dmax, partial=candidate)


def complexity_estimate(n, d, omega) -> int:
    """ceil(N^omega) with N = C(n + d, n)."""
    if not 2 <= omega < 3:
        raise InvalidExponent(f"omega must satisfy 2 <= omega < 3, got {omega}")
    N = math.comb(n + d, n)
    if float(omega).is_integer():
        return N ** int(omega)
    with localcontext() as ctx:
        ctx.prec = 60
        val = Decimal(N) ** Decimal(repr(float(omega)))
        return int(val.to_integral_value(rounding=ROUND_CEILING))
