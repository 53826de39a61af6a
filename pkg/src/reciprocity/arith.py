"""Exact rational arithmetic helpers: factorization, valuations, places.

Rationals are plain :class:`fractions.Fraction` values, which are always
kept reduced with a positive denominator.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple, Union

RationalLike = Union[int, Fraction, str]

#: Largest magnitude accepted by :func:`factor_int`.
FACTOR_LIMIT = 2**63

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_TRIAL_BOUND = 10_000


class DomainError(ValueError):
    """An argument lies outside the domain of a number-theoretic function."""


def to_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` (int, Fraction or a string like ``"-5/6"``) to a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational number: {x!r}") from exc
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


def nonzero_rational(x: RationalLike) -> Fraction:
    q = to_rational(x)
    if q == 0:
        raise DomainError("argument must be nonzero")
    return q


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(n: int) -> list:
    """All primes p < n (simple sieve)."""
    if n < 3:
        return []
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_brent(n: int) -> int:
    # returns a nontrivial factor of the odd composite n
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> Dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``.

    Small factors are removed by trial division; a composite cofactor left
    over is split with Pollard-Brent.
    """
    if n < 1:
        raise DomainError("factor_int expects a positive integer")
    if n > FACTOR_LIMIT:
        raise DomainError(f"{n} exceeds the supported factoring range (2**63)")
    out: Dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel over 6k +- 1
    d, step = 7, 4
    while d <= _TRIAL_BOUND and d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
        else:
            f = _pollard_brent(m)
            stack.extend((f, m // f))
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class Factorization:
    sign: int
    exponents: Dict[int, int] = field(default_factory=dict)

    def value(self) -> Fraction:
        out = Fraction(self.sign)
        for p, e in self.exponents.items():
            out *= Fraction(p) ** e
        return out


def factor(x: RationalLike) -> Factorization:
    """Signed prime factorization of a nonzero rational.

    Primes of the denominator get negative exponents.

    >>> factor(Fraction(-5, 6))
    Factorization(sign=-1, exponents={2: -1, 3: -1, 5: 1})
    """
    q = nonzero_rational(x)
    exps = dict(factor_int(abs(q.numerator))) if abs(q.numerator) > 1 else {}
    if q.denominator > 1:
        for p, e in factor_int(q.denominator).items():
            exps[p] = -e
    return Factorization(1 if q > 0 else -1, dict(sorted(exps.items())))


def valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise DomainError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_decompose(x: RationalLike, p: int) -> Tuple[int, Fraction]:
    """Split x = p**v * u with u a unit at p; returns ``(v, u)``."""
    q = nonzero_rational(x)
    num, den = q.numerator, q.denominator
    vn = valuation(num, p)
    vd = valuation(den, p)
    return vn - vd, Fraction(num // p**vn, den // p**vd)


def is_unit_at(x: Fraction, p: int) -> bool:
    return x != 0 and x.numerator % p != 0 and x.denominator % p != 0


def to_residue(x: RationalLike, m: int) -> int:
    """Image of x under Z_(p) -> Z/mZ (numerator times inverse of denominator)."""
    q = to_rational(x)
    try:
        inv = pow(q.denominator, -1, m)
    except ValueError:
        raise DomainError(f"{q} has a denominator not invertible mod {m}") from None
    return q.numerator * inv % m


@dataclass(frozen=True)
class Place:
    """A place of Q: ``prime=None`` is the real place, otherwise a prime."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)

    @classmethod
    def parse(cls, text: str) -> "Place":
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo", "∞"):
            return INFINITY
        try:
            return cls(int(t))
        except ValueError:
            raise DomainError(f"not a place: {text!r}") from None


INFINITY = Place()


def support(a: RationalLike, b: RationalLike) -> FrozenSet[Place]:
    """Places where (a, b)_v may differ from +1: infinity, 2 and primes dividing a or b."""
    fa, fb = factor(a), factor(b)
    primes = {2} | set(fa.exponents) | set(fb.exponents)
    return frozenset([INFINITY] + [Place(p) for p in primes])
