"""Dense exact linear algebra over F_p on int64 numpy arrays.

With p < 2**31 every product of two residues fits in int64, so a row update
``row - c * pivot_row`` is computed exactly and reduced once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec


@dataclass
class MatrixGF:
    data: np.ndarray
    p: int

    def __post_init__(self):
        FieldSpec(self.p)
        self.data = np.asarray(self.data, dtype=np.int64) % self.p
        if self.data.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {self.data.shape}")

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, k, p):
        return cls(np.eye(k, dtype=np.int64), p)

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.p == other.p
                and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))


def _as_matrix(M, p=None):
    if isinstance(M, MatrixGF):
        return M
    return MatrixGF(np.asarray(M), p)


def _echelon(A, p, reduced):
    """In-place elimination on A; returns the list of pivot columns."""
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r, c:] = A[r, c:] * inv % p
        lo = 0 if reduced else r + 1
        col = A[lo:, c].copy()
        if not reduced:
            mask = np.flatnonzero(col)
        else:
            col[r - lo] = 0
            mask = np.flatnonzero(col)
        if mask.size:
            idx = mask + lo
            A[idx, c:] = (A[idx, c:] - np.outer(col[mask], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(M, p=None):
    """Reduced row echelon form and the strictly increasing pivot columns.

    Pivoting is deterministic: for each column the first nonzero row at or
    below the current one is chosen.
    """
    M = _as_matrix(M, p)
    A = M.data.copy()
    pivots = _echelon(A, M.p, reduced=True)
    return MatrixGF(A, M.p), tuple(pivots)


def rank(M, p=None) -> int:
    M = _as_matrix(M, p)
    if M.data.size == 0:
        return 0
    A = M.data.copy()
    # eliminate along the shorter dimension
    if A.shape[0] > A.shape[1]:
        A = np.ascontiguousarray(A.T)
    return len(_echelon(A, M.p, reduced=False))


def kernel_dim(M, p=None) -> int:
    """Dimension of {v : M v = 0}, i.e. cols - rank."""
    M = _as_matrix(M, p)
    return M.cols - rank(M)


def reduces_to_zero(rows, basis_rref, pivots, p):
    """True if every row lies in the row space of an RREF ``basis_rref``."""
    R = np.asarray(rows, dtype=np.int64) % p
    B = basis_rref
    for i, c in enumerate(pivots):
        f = R[:, c].copy()
        nz = np.flatnonzero(f)
        if nz.size:
            R[nz] = (R[nz] - np.outer(f[nz], B[i])) % p
    return not R.any()
