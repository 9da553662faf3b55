from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orthonf import FiniteField, field_of_order
from orthonf.errors import (
    DivisionByZero,
    FieldError,
    NoDefaultModulus,
    NonPrimeCharacteristic,
    ReducibleModulus,
)
from orthonf.field import DEFAULT_MODULI, is_prime

from oracles import F4_MUL, gf_poly_mul

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_prime_field_context():
    F = FiniteField(3)
    assert (F.p, F.k, F.q) == (3, 1, 3)


def test_f4_from_explicit_modulus():
    F = FiniteField(2, 2, (1, 1, 1))
    assert F.q == 4
    assert list(F.elements()) == [0, 1, 2, 3]


def test_non_prime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        FiniteField(4)
    with pytest.raises(NonPrimeCharacteristic):
        FiniteField(1)


def test_reducible_modulus_rejected():
    # t^2 + 1 = (t + 1)^2 over F_2
    with pytest.raises(ReducibleModulus):
        FiniteField(2, 2, (1, 0, 1))
    # t^2 + 1 over F_5 has the root 2
    with pytest.raises(ReducibleModulus):
        FiniteField(5, 2, (1, 0, 1))


def test_missing_default_modulus():
    with pytest.raises(NoDefaultModulus):
        FiniteField(2, 5)
    assert issubclass(NoDefaultModulus, FieldError)


def test_default_moduli_are_irreducible():
    for q, m in DEFAULT_MODULI.items():
        F = field_of_order(q)
        assert F.q == q and tuple(F.modulus) == tuple(m)


def test_prime_arith_examples():
    F = FiniteField(3)
    assert F.add(2, 2) == 1
    assert F.mul(2, 2) == 1
    assert F.inv(2) == 2
    assert FiniteField(5).inv(3) == 2
    assert F.pow(2, 3) == 2
    assert FiniteField(2).pow(0, 0) == 1


def test_f4_examples():
    F = FiniteField(2, 2, (1, 1, 1))
    t = 2
    assert F.mul(t, t) == 3
    assert F.pow(t, 4) == t


def test_f4_matches_hand_table():
    F = FiniteField(2, 2, (1, 1, 1))
    for a, b in product(range(4), repeat=2):
        assert F.mul(a, b) == F4_MUL[a][b]
        assert F.add(a, b) == a ^ b


@pytest.mark.parametrize("q", [8, 9, 16, 25, 27])
def test_extension_mul_matches_long_multiplication(q):
    F = field_of_order(q)
    for a, b in product(range(q), repeat=2):
        assert F.mul(a, b) == gf_poly_mul(a, b, F.p, list(F.modulus))


def test_inverse_of_zero():
    for q in (2, 3, 4):
        with pytest.raises(DivisionByZero):
            field_of_order(q).inv(0)
    with pytest.raises(ZeroDivisionError):
        FiniteField(5).div(1, 0)


def test_enumerate_elements():
    assert list(FiniteField(2).elements()) == [0, 1]
    assert list(FiniteField(3).elements()) == [0, 1, 2]
    assert len(field_of_order(4).elements()) == 4


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
            if b:
                assert F.mul(F.div(a, b), b) == a
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", SMALL_ORDERS + [25, 27, 256])
def test_fermat(q):
    if q == 256:
        F = FiniteField(2, 8, (1, 0, 1, 1, 1, 0, 0, 0, 1))
    else:
        F = field_of_order(q)
    for a in F.elements():
        assert F.pow(a, q) == a


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_encoding_round_trip(q):
    F = field_of_order(q)
    for a in F.elements():
        coeffs = F.decode(a)
        assert len(coeffs) == F.k
        assert F.encode(coeffs) == a


@pytest.mark.parametrize("q", [3, 4, 9])
def test_vectorized_ops_agree_with_scalar(q):
    F = field_of_order(q)
    a, b = np.meshgrid(np.arange(q), np.arange(q))
    a, b = a.ravel(), b.ravel()
    assert F.vadd(a, b).tolist() == [F.add(x, y) for x, y in zip(a, b)]
    assert F.vmul(a, b).tolist() == [F.mul(x, y) for x, y in zip(a, b)]
    assert F.vsub(a, b).tolist() == [F.sub(x, y) for x, y in zip(a, b)]
    assert F.vneg(a).tolist() == [F.neg(x) for x in a]
    expected = 0
    for x, y in zip(a, b):
        expected = F.add(expected, F.mul(x, y))
    assert F.vdot(a, b) == expected
    for x in range(q):
        for e in range(q):
            assert F.power_table[x, e] == F.pow(x, e)


def test_spec_strings():
    assert FiniteField.from_spec("5") == FiniteField(5)
    F4 = FiniteField.from_spec("2^2")
    assert F4 == FiniteField(2, 2, (1, 1, 1))
    assert F4.spec() == "2^2:m=7"
    assert FiniteField(5).spec() == "5"
    # t^2 + t + 1 over F_2 has index 1 + 2 + 4
    assert F4.encode_modulus() == 7
    assert FiniteField.from_spec("2^2:m=7") == F4
    alt = FiniteField.from_spec("3^2:m=14")  # t^2 + t + 2 -> 2 + 1*3 + 1*9
    assert tuple(alt.modulus) == (2, 1, 1)
    assert FiniteField.from_spec(alt.spec()) == alt


@pytest.mark.parametrize("text", ["", "x", "2^", "2^0", "6", "2^2:m=5", "2^2:m=", "2^3:q=11"])
def test_bad_spec_strings(text):
    with pytest.raises(FieldError):
        FiniteField.from_spec(text)


def test_membership_check():
    F = FiniteField(3)
    assert 2 in F and 3 not in F and -1 not in F
    with pytest.raises(ValueError):
        F.check(3)


@given(st.sampled_from([2, 3, 5, 7, 4, 8, 9]), st.data())
def test_pow_matches_repeated_multiplication(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(0, q - 1))
    e = data.draw(st.integers(0, 40))
    acc = 1
    for _ in range(e):
        acc = F.mul(acc, a)
    assert F.pow(a, e) == acc
