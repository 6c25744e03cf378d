from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField, QuadraticExtension, is_prime, legendre


def test_prime_field_rejects_composites_and_two():
    with pytest.raises(PrecondError):
        PrimeField(9)
    with pytest.raises(PrecondError):
        PrimeField(1)
    with pytest.raises(PrecondError):
        PrimeField(2)


def test_is_prime_small():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


@given(st.sampled_from([3, 5, 11, 13]), st.integers(-50, 50), st.integers(-50, 50))
def test_prime_field_ring_laws(p, a, b):
    f = PrimeField(p)
    x, y = f.from_int(a), f.from_int(b)
    assert f.add(x, y) == (a + b) % p
    assert f.mul(x, y) == (a * b) % p
    assert f.sub(x, y) == f.add(x, f.neg(y))


@given(st.sampled_from([3, 5, 11, 13]), st.integers(1, 200))
def test_prime_field_inverse(p, a):
    f = PrimeField(p)
    x = f.from_int(a)
    if x == 0:
        with pytest.raises(PrecondError):
            f.inv(x)
    else:
        assert f.mul(x, f.inv(x)) == 1


def test_legendre_multiplicative_mod_7():
    for a in range(1, 7):
        for b in range(1, 7):
            assert legendre(a * b, 7) == legendre(a, 7) * legendre(b, 7)
    assert legendre(0, 7) == 0


def test_quadratic_character():
    f = PrimeField(11)
    squares = {(x * x) % 11 for x in range(1, 11)}
    for a in range(1, 11):
        assert f.chi(a) == (1 if a in squares else -1)
    assert f.chi(0) == 0


def test_rational_parse():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse(-2) == Fraction(-2)
    assert QQ.parse(" 5/7 ") == Fraction(5, 7)
    with pytest.raises(PrecondError):
        QQ.parse("1/0")
    with pytest.raises(PrecondError):
        QQ.parse(True)
    with pytest.raises(PrecondError):
        QQ.parse(0.5)


def test_prime_parse_fractions():
    f = PrimeField(5)
    assert f.parse("3/4") == f.div(3, 4)
    assert f.parse(Fraction(1, 2)) == f.inv(2)
    with pytest.raises(PrecondError):
        f.parse("1/5")  # denominator divisible by p
    with pytest.raises(PrecondError):
        f.parse("x")


def test_quadratic_extension_arithmetic():
    # F_9 = F_3[w]/(w^2 - nu) with nu the least nonresidue mod 3, i.e. 2
    f9 = QuadraticExtension.of(PrimeField(3))
    assert f9.nu == 2
    w = (0, 1)
    assert f9.mul(w, w) == f9.from_int(2)
    a = (1, 2)
    assert f9.mul(a, f9.inv(a)) == f9.one
    # norm lands in the base field: (a + bw)(a - bw) = a^2 - nu b^2
    conj = (a[0], f9.base.neg(a[1]))
    prod = f9.mul(a, conj)
    assert prod[1] == 0
    assert prod[0] == f9.norm(a)


def test_quadratic_extension_element_count():
    f9 = QuadraticExtension.of(PrimeField(3))
    assert len(list(f9.elements())) == 9
    with pytest.raises(PrecondError):
        QuadraticExtension(PrimeField(3), 1)  # 1 is a square
