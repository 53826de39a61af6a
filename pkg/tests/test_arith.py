from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.arith import (
    INFINITY,
    DomainError,
    Place,
    factor,
    factor_int,
    is_prime,
    primes_below,
    support,
    vp_decompose,
)

nonzero_rationals = st.builds(
    Fraction,
    st.integers(-10**9, 10**9).filter(bool),
    st.integers(1, 10**9),
)


def brute_is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def test_is_prime_matches_trial_division():
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if brute_is_prime(n)]
    assert primes_below(3000) == [n for n in range(3000) if brute_is_prime(n)]


def test_is_prime_strong_pseudoprimes():
    # composites that fool Miller-Rabin to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)


@pytest.mark.parametrize(
    "x, sign, exps",
    [
        (60, 1, {2: 2, 3: 1, 5: 1}),
        (1, 1, {}),
        (Fraction(-5, 6), -1, {2: -1, 3: -1, 5: 1}),
    ],
)
def test_factor_examples(x, sign, exps):
    f = factor(x)
    assert (f.sign, f.exponents) == (sign, exps)
    assert f.value() == x


def test_factor_large_semiprime():
    p, q = 2147483647, 2147483629
    assert factor_int(p * q) == {q: 1, p: 1}


def test_factor_rejects_zero_and_huge():
    with pytest.raises(DomainError):
        factor(0)
    with pytest.raises(DomainError):
        factor(2**64 + 1)


@given(nonzero_rationals)
def test_factor_roundtrip(x):
    f = factor(x)
    assert f.value() == x
    assert all(is_prime(p) and e for p, e in f.exponents.items())


@pytest.mark.parametrize(
    "x, p, v, u",
    [(12, 2, 2, 3), (Fraction(5, 6), 3, -1, Fraction(5, 2)), (7, 5, 0, 7)],
)
def test_vp_decompose_examples(x, p, v, u):
    assert vp_decompose(x, p) == (v, u)


@given(nonzero_rationals, st.sampled_from([2, 3, 5, 7, 11, 13, 97]))
def test_vp_decompose_property(x, p):
    v, u = vp_decompose(x, p)
    assert u.numerator % p and u.denominator % p
    assert Fraction(p) ** v * u == x


def test_support_examples():
    assert support(3, 5) == {INFINITY, Place(2), Place(3), Place(5)}
    assert support(1, 1) == {INFINITY, Place(2)}
    assert support(-1, -1) == {INFINITY, Place(2)}


@given(nonzero_rationals, nonzero_rationals)
def test_support_covers_nonunits(a, b):
    places = support(a, b)
    for p in primes_below(60):
        if Place(p) not in places:
            assert vp_decompose(a, p)[0] == 0 and vp_decompose(b, p)[0] == 0


def test_place_ordering_and_validation():
    assert sorted([Place(5), INFINITY, Place(2)]) == [INFINITY, Place(2), Place(5)]
    assert Place.parse("inf") == INFINITY and Place.parse("7") == Place(7)
    with pytest.raises(DomainError):
        Place(9)
