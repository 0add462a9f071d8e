from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chordalelim.arith import QQ, PrimeField, format_field, is_prime, parse_field


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_prime_field_mul():
    f7 = PrimeField(7)
    assert f7.mul(4, 5) == 6


def test_additive_inverse_random():
    f7 = PrimeField(7)
    for a in range(7):
        assert f7.add(a, f7.neg(a)) == 0
    for num in range(-5, 6):
        a = Fraction(num, 3)
        assert QQ.add(a, QQ.neg(a)) == 0


def test_rational_inverse():
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_prime_inverse_extended_euclid_oracle():
    # oracle: extended Euclid, independent of pow(-1)
    def egcd(a, b):
        if b == 0:
            return a, 1, 0
        g, x, y = egcd(b, a % b)
        return g, y, x - (a // b) * y

    f7 = PrimeField(7)
    got = f7.inv(3)
    g, x, _ = egcd(3, 7)
    assert g == 1 and got == x % 7 == 5
    assert f7.mul(3, got) == 1


def test_gf2_only_unit():
    f2 = PrimeField(2)
    assert f2.inv(1) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_axioms(a, b, c):
    assert QQ.add(QQ.add(a, b), c) == QQ.add(a, QQ.add(b, c))
    assert QQ.mul(QQ.mul(a, b), c) == QQ.mul(a, QQ.mul(b, c))
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == 1


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_prime_field_axioms(a, b, c):
    for p in (2, 3, 7, 11):
        f = PrimeField(p)
        assert f.add(f.add(a % p, b % p), c % p) == f.add(a % p, f.add(b % p, c % p))
        assert f.mul(a % p, f.add(b % p, c % p)) == \
            f.add(f.mul(a % p, b % p), f.mul(a % p, c % p))
        if a % p:
            assert f.mul(a % p, f.inv(a % p)) == 1


def test_canonical_forms_unique():
    assert Fraction(2, 4) == Fraction(1, 2)
    assert Fraction(1, -2) == Fraction(-1, 2)
    assert Fraction(1, -2).denominator == 2
    f7 = PrimeField(7)
    assert f7.element(-1) == 6
    assert f7.element(15) == 1


def test_field_parsing_and_equality():
    assert parse_field("Q") == QQ
    assert parse_field("GF(7)") == PrimeField(7)
    assert format_field(PrimeField(3)) == "GF(3)"
    assert PrimeField(3) != PrimeField(5)
    with pytest.raises(ValueError):
        parse_field("GF(6)")
    with pytest.raises(ValueError):
        parse_field("R")
    with pytest.raises(ValueError):
        PrimeField(9)


def test_prime_checker():
    primes = {2, 3, 5, 7, 11, 13, 241, 251}
    for n in range(2, 260):
        assert is_prime(n) == (n in primes or all(n % d for d in range(2, n)))


def test_parse_literals():
    assert QQ.parse("3/2") == Fraction(3, 2)
    assert QQ.parse("-5") == Fraction(-5)
    f7 = PrimeField(7)
    assert f7.parse("10") == 3
    assert f7.parse("1/3") == f7.inv(3)
