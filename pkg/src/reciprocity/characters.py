"""Quadratic characters of Z_(p)^x: the Legendre character for odd p and
the three characters lambda4, lambda8, lambda4*lambda8 at p = 2.

Signs are plain ints, +1 or -1.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import DomainError, RationalLike, factor, is_prime, to_rational, to_residue


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise DomainError("legendre is defined for odd primes only")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def _unit_at(a: RationalLike, p: int) -> Fraction:
    q = to_rational(a)
    if q == 0 or q.numerator % p == 0 or q.denominator % p == 0:
        raise DomainError(f"{q} is not a {p}-adic unit")
    return q


def parity(e: Fraction) -> int:
    """Reduce an element of Z_(2) mod 2.

    The denominator is odd, hence invertible mod 2, so only the parity of
    the numerator matters.
    """
    if e.denominator % 2 == 0:
        raise DomainError(f"{e} is not in Z_(2)")
    return e.numerator % 2


def sign_power(e: Fraction) -> int:
    """(-1)**e for e in Z_(2)."""
    return -1 if parity(e) else 1


def legendre(a: RationalLike, p: int) -> int:
    """lambda_p(a) via Euler's criterion on the reduction of a into F_p."""
    _check_odd_prime(p)
    r = to_residue(_unit_at(a, p), p)
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


# The characters at 2 are defined on (Z/8Z)^x; Z_(2)^x maps onto it.
def lambda4(a: RationalLike) -> int:
    """The character pulled back from (Z/4Z)^x: +1 iff a = 1 mod 4."""
    r = to_residue(_unit_at(a, 2), 8)
    return 1 if r % 4 == 1 else -1


def lambda8(a: RationalLike) -> int:
    """The even character of (Z/8Z)^x, trivial on +-1."""
    r = to_residue(_unit_at(a, 2), 8)
    return 1 if r in (1, 7) else -1


def lambda48(a: RationalLike) -> int:
    return lambda4(a) * lambda8(a)


def lambda4_formula(a: RationalLike) -> int:
    """(-1)**((a-1)/2) computed in Z_(2)."""
    q = _unit_at(a, 2)
    return sign_power((q - 1) / 2)


def lambda8_formula(a: RationalLike) -> int:
    """(-1)**((a**2-1)/8) computed in Z_(2)."""
    q = _unit_at(a, 2)
    return sign_power((q * q - 1) / 8)


CHARACTERS_AT_2 = {"4": lambda4, "8": lambda8, "48": lambda48}


def centered_residue(a: int, q: int) -> int:
    """Representative of a mod q in (-q/2, q/2)."""
    r = a % q
    return r - q if 2 * r > q else r


def legendre_via_reciprocity(a: RationalLike, p: int) -> int:
    """lambda_p(a) evaluated only through the reciprocity law.

    a is first reduced to a small representative mod p, factored over
    -1, 2 and odd primes q, and each odd prime factor is handled by
    lambda_p(q) = lambda_q(lambda4(p) * p), recursing with modulus q < p.
    """
    _check_odd_prime(p)
    r = centered_residue(to_residue(_unit_at(a, p), p), p)
    f = factor(r)
    out = lambda4(p) if f.sign < 0 else 1
    for q, e in f.exponents.items():
        if e % 2 == 0:
            continue
        if q == 2:
            out *= lambda8(p)
        else:
            out *= legendre_via_reciprocity(centered_residue(lambda4(p) * p, q), q)
    return out
