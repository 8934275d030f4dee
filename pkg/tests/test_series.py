import math

import pytest
from hypothesis import given, strategies as st

from semigb.errors import InvalidDegree, NotArtinian
from semigb.series import (
    BY_BRACKET, BY_PRECISION, INFINITE, cumulative, degree_of_regularity,
    hf_from_staircase, hilbert_numerator, hilbert_series_from_numerator,
    homogenized_prefix, macaulay_bound, semiregular_series, series_coefficients,
)

from oracles import standard_count


def naive_series(n, degrees, k):
    """Coefficient k by expanding prod(1 - z^d) and summing binomials."""
    num = {0: 1}
    for d in degrees:
        nxt = dict(num)
        for e, c in num.items():
            nxt[e + d] = nxt.get(e + d, 0) - c
        num = nxt
    return sum(c * math.comb(k - e + n - 1, n - 1) for e, c in num.items() if e <= k)


def test_semiregular_examples():
    s = semiregular_series(3, (2, 2, 2, 2))
    assert s.coeffs == (1, 3, 2) and s.truncation == BY_BRACKET
    s = semiregular_series(1, (2,))
    assert s.coeffs == (1, 1) and s.truncation == BY_BRACKET
    s = semiregular_series(3, (), precision=4)
    assert s.coeffs == (1, 3, 6, 10, 15) and s.truncation == BY_PRECISION


def test_invalid_degree():
    with pytest.raises(InvalidDegree):
        semiregular_series(3, (2, 0))
    with pytest.raises(InvalidDegree):
        degree_of_regularity(3, (0,))


def test_degree_of_regularity_examples():
    assert degree_of_regularity(3, (2, 2, 2, 2)) == 3
    assert degree_of_regularity(3, (2, 2)) == INFINITE
    assert degree_of_regularity(3, (2, 2, 2, 2), bound=2) == INFINITE
    assert degree_of_regularity(3, (2, 2, 2, 2), bound=3) == 3


def test_homogenized_prefix_examples():
    assert homogenized_prefix(3, (2, 2, 2, 2)).coeffs == (1, 4, 6)
    assert cumulative((1, 3, 2)) == (1, 4, 6)
    a = homogenized_prefix(4, (2,) * 5).coeffs
    assert a == cumulative(semiregular_series(4, (2,) * 5).coeffs)
    with pytest.raises(NotArtinian):
        homogenized_prefix(3, (2, 2))


def test_staircase_examples():
    lt = [(0, 1, 2), (0, 0, 3), (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]
    assert hf_from_staircase(lt, 3, 2) == 2
    lh = [(1, 0, 0, 3), (0, 1, 0, 3), (0, 0, 1, 3), (0, 1, 2, 0), (0, 0, 3, 0),
          (0, 1, 1, 1), (0, 0, 2, 1), (2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0)]
    assert hf_from_staircase(lh, 4, 3) == 4
    assert hf_from_staircase(lh, 4, 4) == 1


def test_macaulay_bound():
    assert macaulay_bound(3, (2, 2, 2, 2)) == 5
    assert macaulay_bound(3, (3, 2)) == 4
    assert macaulay_bound(2, (2, 2, 2, 2)) == 4


shapes = st.tuples(st.integers(1, 6), st.lists(st.integers(1, 4), max_size=7))


@given(shapes)
def test_series_matches_binomial_expansion(shape):
    n, degs = shape
    c = series_coefficients(n, degs, 12)
    assert c == [naive_series(n, degs, k) for k in range(13)]


@given(shapes)
def test_bracket_invariant(shape):
    n, degs = shape
    s = semiregular_series(n, degs, precision=30)
    assert all(c > 0 for c in s.coeffs)
    full = series_coefficients(n, degs, len(s.coeffs))
    if s.truncation == BY_BRACKET:
        assert full[len(s.coeffs)] <= 0
        assert degree_of_regularity(n, degs, bound=30) == len(s.coeffs)
    else:
        assert len(s.coeffs) == 31


@given(shapes)
def test_prefix_is_cumulative_and_increasing(shape):
    n, degs = shape
    D = degree_of_regularity(n, degs)
    if D == INFINITE:
        return
    h = homogenized_prefix(n, degs).coeffs
    assert len(h) == D
    assert h == cumulative(semiregular_series(n, degs).coeffs)
    assert all(a < b for a, b in zip(h, h[1:]))


mono_sets = st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple),
                     max_size=6)


@given(mono_sets)
def test_numerator_matches_staircase(lms):
    lms = [m for m in lms if any(m)]
    num = hilbert_numerator(lms, 3)
    hf = hilbert_series_from_numerator(num, 3, 9)
    assert hf == [standard_count(lms, 3, d) for d in range(10)]
    assert all(hf_from_staircase(lms, 3, d) == hf[d] for d in range(10))
