import numpy as np
import pytest
from hypothesis import given, strategies as st

from semigb.errors import NotPrime
from semigb.linalg import MatrixGF, kernel_dim, rank, reduces_to_zero, rref

from oracles import rank_mod_p


def test_rref_examples():
    I = MatrixGF.identity(4, 73)
    R, piv = rref(I)
    assert R == I and piv == (0, 1, 2, 3)
    Z = MatrixGF.zeros(3, 5, 73)
    R, piv = rref(Z)
    assert R == Z and piv == ()
    R, piv = rref(MatrixGF([[2, 4], [1, 2]], 73))
    assert R == MatrixGF([[1, 2], [0, 0]], 73) and piv == (0,)


def test_rank_and_kernel_examples():
    assert rank(MatrixGF.identity(5, 73)) == 5
    assert rank(MatrixGF.zeros(3, 4, 73)) == 0
    assert kernel_dim(MatrixGF.zeros(4, 4, 73)) == 4
    assert kernel_dim(MatrixGF.identity(4, 73)) == 0
    assert kernel_dim(MatrixGF([[1, 1]], 73)) == 1
    assert rank(MatrixGF(np.zeros((0, 3), dtype=np.int64), 73)) == 0


def test_matrix_validation():
    with pytest.raises(NotPrime):
        MatrixGF([[1]], 4)
    with pytest.raises(ValueError):
        MatrixGF([1, 2, 3], 73)
    assert MatrixGF([[-1, 74]], 73).data.tolist() == [[72, 1]]


def test_large_prime_exact():
    p = 2**31 - 1
    M = MatrixGF([[p - 1, p - 2], [p - 3, p - 5]], p)
    assert rank(M) == rank_mod_p(M.data.tolist(), p)


matrices = st.tuples(st.integers(1, 8), st.integers(1, 8), st.sampled_from([2, 3, 73, 65521]),
                     st.integers(0, 2**32 - 1))


def draw(shape):
    r, c, p, seed = shape
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(r, c))
    # sprinkle dependencies so low ranks occur
    if r > 1 and seed % 3 == 0:
        A[-1] = (A[0] * 5 + A[1 % r]) % p
    return MatrixGF(A, p)


@given(matrices)
def test_rank_matches_oracle(shape):
    M = draw(shape)
    assert rank(M) == rank_mod_p(M.data.tolist(), M.p)
    assert rank(M) + kernel_dim(M) == M.cols


@given(matrices)
def test_rref_properties(shape):
    M = draw(shape)
    R, piv = rref(M)
    assert list(piv) == sorted(set(piv))
    assert len(piv) == rank(M)
    for i, c in enumerate(piv):
        assert R.data[i, c] == 1
        col = R.data[:, c].copy()
        col[i] = 0
        assert not col.any()
        assert not R.data[i, :c].any()
    assert not R.data[len(piv):].any()
    R2, piv2 = rref(R)
    assert R2 == R and piv2 == piv
    assert reduces_to_zero(M.data, R.data[:len(piv)], piv, M.p)
    assert reduces_to_zero(R.data[:len(piv)], R.data[:len(piv)], piv, M.p) if piv else True
