from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.arith import DomainError, primes_below
from reciprocity.characters import (
    lambda4,
    lambda4_formula,
    lambda8,
    lambda8_formula,
    lambda48,
    legendre,
    legendre_via_reciprocity,
)

ODD_PRIMES = primes_below(200)[1:]


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


@pytest.mark.parametrize("a, p, expected", [(2, 7, 1), (1, 3, 1), (1, 101, 1), (Fraction(1, 5), 3, -1), (3, 7, -1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected
    assert legendre_via_reciprocity(a, p) == expected


def test_legendre_matches_enumerated_squares():
    for p in primes_below(120)[1:]:
        sq = squares_mod(p)
        for a in range(1, p):
            assert legendre(a, p) == (1 if a in sq else -1)


@pytest.mark.parametrize("bad", [(7, 7), (Fraction(1, 7), 7), (0, 5)])
def test_legendre_rejects_nonunits(bad):
    with pytest.raises(DomainError, match="not a 7-adic unit|not a 5-adic unit"):
        legendre(*bad)


def test_legendre_rejects_p2_and_composites():
    with pytest.raises(DomainError):
        legendre(3, 2)
    with pytest.raises(DomainError):
        legendre(2, 15)


def test_characters_at_two_examples():
    assert lambda4(-1) == -1 and lambda4(1) == 1 and lambda4(Fraction(1, 3)) == -1
    assert lambda8(-1) == 1 and lambda8(7) == 1 and lambda8(3) == -1
    assert lambda48(-1) == -1 and lambda48(1) == 1 and lambda48(3) == 1
    with pytest.raises(DomainError):
        lambda8(6)


odd_units = st.builds(
    Fraction,
    st.integers(-10**6, 10**6).map(lambda n: 2 * n + 1),
    st.integers(0, 10**6).map(lambda n: 2 * n + 1),
)


@given(odd_units, odd_units)
def test_two_adic_characters_multiplicative(a, b):
    for chi in (lambda4, lambda8, lambda48):
        assert chi(a * b) == chi(a) * chi(b)


@given(odd_units)
def test_formulas_agree_with_tables(a):
    assert lambda4_formula(a) == lambda4(a)
    assert lambda8_formula(a) == lambda8(a)


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 10**6), st.integers(1, 10**6))
def test_legendre_multiplicative(p, a, b):
    if a % p and b % p:
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_euler_congruence():
    for p in ODD_PRIMES[:20]:
        for a in range(-3 * p, 3 * p):
            if a % p:
                assert pow(a, (p - 1) // 2, p) == legendre(a, p) % p


def test_depend_only_on_residue_mod_8():
    for chi in (lambda4, lambda8):
        for r in (1, 3, 5, 7):
            assert len({chi(r + 8 * k) for k in range(-50, 50)}) == 1


def test_descent_agrees_with_euler():
    for p in ODD_PRIMES:
        for a in range(-1000, 1001):
            if a % 2 and a % p:
                assert legendre_via_reciprocity(a, p) == legendre(a, p), (a, p)


def test_descent_on_rationals():
    for p in (3, 5, 13, 101):
        for a in (Fraction(2, 9), Fraction(-7, 4), Fraction(11, 8)):
            if a.numerator % p and a.denominator % p:
                assert legendre_via_reciprocity(a, p) == legendre(a, p)


def test_surjective():
    for p in ODD_PRIMES:
        assert any(legendre(a, p) == -1 for a in range(1, p))
