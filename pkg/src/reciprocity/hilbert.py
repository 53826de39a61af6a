"""Hilbert symbols (a, b)_v over Q at every place, and the product formula."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .arith import (
    DomainError,
    Place,
    RationalLike,
    is_prime,
    nonzero_rational,
    support,
    vp_decompose,
)
from .characters import lambda8, legendre, sign_power


def real_symbol(a: RationalLike, b: RationalLike) -> int:
    a, b = nonzero_rational(a), nonzero_rational(b)
    return -1 if a < 0 and b < 0 else 1


def t_value(a: RationalLike, b: RationalLike, p: int) -> Fraction:
    """(-1)**(v(a)v(b)) * u_a**v(b) * u_b**(-v(a)), a unit at p."""
    va, ua = vp_decompose(a, p)
    vb, ub = vp_decompose(b, p)
    sign = -1 if (va * vb) % 2 else 1
    return sign * ua**vb * ub ** (-va)


def symbol_at(a: RationalLike, b: RationalLike, v: Place) -> int:
    a, b = nonzero_rational(a), nonzero_rational(b)
    if v.is_infinite:
        return real_symbol(a, b)
    p = v.prime
    t = t_value(a, b, p)
    if p != 2:
        return legendre(t, p)
    _, ua = vp_decompose(a, 2)
    _, ub = vp_decompose(b, 2)
    return sign_power((ua - 1) / 2 * ((ub - 1) / 2)) * lambda8(t)


def hilbert_symbol(a: RationalLike, b: RationalLike, place) -> int:
    """Like :func:`symbol_at` but also accepts ``"inf"`` or a bare prime."""
    if not isinstance(place, Place):
        place = Place.parse(str(place))
    return symbol_at(a, b, place)


@dataclass(frozen=True)
class LocalSymbolReport:
    place: Place
    symbol: int
    t_value: Optional[Fraction] = None


@dataclass(frozen=True)
class ProductReport:
    entries: List[LocalSymbolReport]
    product: int


def product_check(a: RationalLike, b: RationalLike) -> ProductReport:
    """Evaluate (a, b)_v over the support of (a, b); other places give +1."""
    a, b = nonzero_rational(a), nonzero_rational(b)
    entries = []
    product = 1
    for v in sorted(support(a, b)):
        s = symbol_at(a, b, v)
        t = None if v.is_infinite else t_value(a, b, v.prime)
        entries.append(LocalSymbolReport(v, s, t))
        product *= s
    return ProductReport(entries, product)


class RousseauResult(NamedTuple):
    lhs: int
    rhs: int


def _as_sign(x: int, p: int) -> int:
    x %= p
    if x == 1:
        return 1
    if x == p - 1:
        return -1
    raise ArithmeticError(f"{x} is not +-1 mod {p}")


def rousseau_check(p: int, q: int) -> RousseauResult:
    """Multiply all elements of (F_p^x x F_q^x)/{+-1} using two sections.

    Section S: x in [1, (pq-1)/2] coprime to pq, mapped by CRT.  Its
    component products are (-1)**((q-1)/2) * lambda_p(q) mod p and
    (-1)**((p-1)/2) * lambda_q(p) mod q (Wilson + Euler); removing the
    Wilson signs gives ``lhs = lambda_p(q) * lambda_q(p)``.

    Section T: F_p^x x {1, ..., (q-1)/2}.  The same normalization applied
    to its brute-force product gives ``rhs``.  Both sections represent the
    same quotient, so the products agree up to one common sign, which
    cancels in lhs and rhs.
    """
    for r in (p, q):
        if r == 2 or not is_prime(r):
            raise DomainError(f"{r} is not an odd prime")
    if p == q:
        raise DomainError("rousseau_check needs distinct primes")
    wp = (-1) ** ((q - 1) // 2)
    wq = (-1) ** ((p - 1) // 2)

    sp = sq = 1
    for x in range(1, (p * q - 1) // 2 + 1):
        if x % p and x % q:
            sp = sp * x % p
            sq = sq * x % q
    lam_pq = _as_sign(sp * wp, p)
    lam_qp = _as_sign(sq * wq, q)
    if lam_pq != legendre(q, p) or lam_qp != legendre(p, q):
        raise ArithmeticError(f"section product disagrees with Euler's criterion at ({p}, {q})")

    # product over F_p^x x {1..(q-1)/2}: each component is a power of a factorial
    half = math.factorial((q - 1) // 2) % q
    tp = pow(math.factorial(p - 1) % p, (q - 1) // 2, p)
    tq = pow(half, p - 1, q)
    rhs = _as_sign(tp * wp, p) * _as_sign(tq * wq, q)
    return RousseauResult(lam_pq * lam_qp, rhs)
