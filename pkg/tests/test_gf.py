import pytest
from hypothesis import given, strategies as st

from semigb import gf
from semigb.errors import DivisionByZero, ModulusMismatch, NotPrime
from semigb.gf import FieldElem, FieldSpec

from oracles import egcd_inverse

K73 = FieldSpec(73)


def el(v, p=73):
    return FieldElem(v, FieldSpec(p))


@pytest.mark.parametrize("a, b, p, want", [(40, 40, 73, 7), (0, 5, 73, 5), (1, 1, 2, 0)])
def test_add(a, b, p, want):
    assert gf.add(el(a, p), el(b, p)).value == want


@pytest.mark.parametrize("a, b, want", [(2, 37, 1), (1, 9, 9), (0, 68, 0)])
def test_mul(a, b, want):
    assert gf.mul(el(a), el(b)).value == want


@pytest.mark.parametrize("a, want", [(1, 1), (2, 37), (72, 72)])
def test_inv(a, want):
    assert gf.inv(el(a)).value == want
    assert want == egcd_inverse(a, 73)


def test_inv_zero():
    with pytest.raises(DivisionByZero):
        gf.inv(el(0))
    with pytest.raises(ZeroDivisionError):
        el(3) / el(0)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        el(1, 73) + el(1, 71)
    with pytest.raises(ModulusMismatch):
        gf.mul(el(1, 73), el(1, 2))


@pytest.mark.parametrize("p", [1, 4, 91, 65535, 2**31, 2**31 + 11])
def test_rejects_non_primes_and_large(p):
    with pytest.raises(NotPrime, match="modulus must be prime"):
        FieldSpec(p)


@pytest.mark.parametrize("p", [2, 3, 73, 65521, 2**31 - 1])
def test_accepts_primes(p):
    assert FieldSpec(p).p == p


def test_primality_matches_trial_division():
    def slow(n):
        return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))
    assert all(gf.is_prime(n) == slow(n) for n in range(3000))


def test_canonical_values():
    assert el(-1).value == 72
    assert el(146).value == 0
    assert el(5) == el(78)
    assert hash(el(5)) == hash(el(78))


@pytest.mark.parametrize("p", [2, 3, 73, 65521])
@given(data=st.data())
def test_field_axioms(p, data):
    K = FieldSpec(p)
    a, b, c = (FieldElem(data.draw(st.integers(0, p - 1)), K) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == FieldElem(0, K)
    if a.value:
        assert a * a.inv() == FieldElem(1, K)
        assert (b / a) * a == b
