import pytest
from hypothesis import given, strategies as st

from semigb.buchberger import EngineOptions, buchberger
from semigb.errors import SemigbError, EmptyMatrix, InvalidExponent, NotReached, TimeoutDegree
from semigb.f5 import Signature, f5_gb, signature_basis
from semigb.koszul import check_crypto_semiregular
from semigb.linalg import rank
from semigb.macaulay import build_macaulay, complexity_estimate, macaulay_gb
from semigb.polyring import PolyRing, PolySequence, drl_key, mono_mul, reduce

from conftest import random_sequence
from test_buchberger import HOM_LMS

TOP_LMS = {(0, 1, 2), (0, 0, 3), (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)}


def test_f5_worked_top(Ftop):
    G = f5_gb(Ftop)
    assert set(G.lms()) == TOP_LMS
    assert G == buchberger(Ftop)


def test_f5_worked_hom(Fh):
    G = f5_gb(Fh)
    assert set(G.lms()) == HOM_LMS
    assert G == buchberger(Fh)


def test_f5_affine(F):
    G = f5_gb(F)
    assert [str(g) for g in G] == ["x3", "x2", "x1"]


def test_f5_zero_reductions_below_D(Ftop, Fh):
    ok, D = check_crypto_semiregular(Ftop)
    assert ok and D == 3
    for H in (Ftop, Fh):
        assert f5_gb(H).log.zero_reductions_below(D) == 0


def test_f5_timeout(Fh):
    with pytest.raises(TimeoutDegree):
        f5_gb(Fh, EngineOptions(max_degree=3))


def test_signature_printing():
    assert str(Signature((1, 0), 0)) == "(1, 0)*e1"


def test_signatures_bound_leading_monomials(Fh):
    basis, syz, _ = signature_basis(Fh)
    m = len(Fh)
    G = buchberger(Fh)
    for lp in basis:
        f = Fh.polys[lp.sig.index]
        # a representation below the signature cannot produce a larger LM
        assert drl_key(lp.poly.LM) <= drl_key(mono_mul(lp.sig.mono, f.LM))
        assert lp.poly.degree == sum(lp.sig.mono) + f.degree
        assert reduce(lp.poly, G.elements).is_zero()
    # trivial syzygies LM(f_j) e_i are pre-seeded for j > i
    for i in range(m):
        for j in range(i + 1, m):
            assert Fh.polys[j].LM in syz[i]


def test_build_macaulay_univariate():
    R = PolyRing(73, 1)
    M = build_macaulay(PolySequence((R.parse("x1^2"),)), 3)
    assert M.row_labels == [((0,), 0), ((1,), 0)]
    assert M.col_labels == [(3,), (2,), (1,), (0,)]
    assert M.body.data.tolist() == [[0, 1, 0, 0], [1, 0, 0, 0]]


def test_build_macaulay_slice(Ftop):
    M = build_macaulay(Ftop, 2, cumulative=False)
    assert M.shape == (4, 6)
    assert rank(M.body) == 6 - 2
    with pytest.raises(EmptyMatrix):
        build_macaulay(Ftop, 1)


def test_build_macaulay_columns_descending(F):
    M = build_macaulay(F, 3)
    keys = [drl_key(c) for c in M.col_labels]
    assert keys == sorted(keys, reverse=True) and len(set(keys)) == len(keys)
    assert M.shape == (4 * 4, 20)


def test_macaulay_examples(F, Fh):
    R = PolyRing(73, 2)
    G, d = macaulay_gb(PolySequence((R.parse("x1"), R.parse("x2"))))
    assert d == 1 and [str(g) for g in G] == ["x2", "x1"]
    G, d = macaulay_gb(F)
    assert d <= 4 and [str(g) for g in G] == ["x3", "x2", "x1"]
    Gh, dh = macaulay_gb(Fh)
    assert Gh == buchberger(Fh) and dh == d


def test_macaulay_not_reached(Fh):
    with pytest.raises(NotReached) as exc:
        macaulay_gb(Fh, dmax=2)
    assert exc.value.partial


def test_complexity_estimate():
    assert complexity_estimate(3, 3, 2) == 400
    assert complexity_estimate(3, 3, 2.81) == 4528  # 20^2.81 = 4527.87...
    assert complexity_estimate(0, 5, 2.5) == 1
    assert complexity_estimate(10, 6, 2) == 8008 ** 2
    for bad in (1.99, 3, 3.5):
        with pytest.raises(InvalidExponent):
            complexity_estimate(3, 3, bad)


instances = st.tuples(st.integers(0, 10**6), st.sampled_from([7, 73, 65521]),
                      st.integers(2, 3), st.lists(st.integers(1, 3), min_size=1, max_size=4),
                      st.booleans())


@given(instances)
def test_engine_equivalence(inst):
    seed, p, n, degs, hom = inst
    F = random_sequence(seed, p, n, degs, hom)
    G = buchberger(F)
    assert f5_gb(F) == G
    Gm, sd = macaulay_gb(F)
    assert Gm == G
    assert G.max_degree() <= sd


@given(instances)
def test_sd_mac_homogenization(inst):
    seed, p, n, degs, _ = inst
    F = random_sequence(seed, p, n, degs)
    sd, sd_h = macaulay_gb(F)[1], macaulay_gb(F.homogenize())[1]
    # same row spaces, so the affine side can only finish earlier
    assert sd <= sd_h
    try:
        certified = check_crypto_semiregular(F.top())[0]
    except SemigbError:
        certified = False
    if certified:
        assert sd == sd_h


def test_sd_mac_can_drop_below_homogenized():
    # unit ideal found in degree 1, while <F^h> still needs x1^2
    F = random_sequence(1, 7, 2, [1, 1, 2])
    assert macaulay_gb(F)[1] == 1
    assert macaulay_gb(F.homogenize())[1] == 2
