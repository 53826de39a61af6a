"""Truncated p-adic numbers, Hensel square roots, and a brute-force
solvability oracle for a*x**2 + b*y**2 = 1 over Q_p.

A nonzero :class:`PadicApprox` stands for ``p**valuation * (mantissa + O(p**precision))``,
so ``precision`` counts significant digits.  The zero element has
``valuation=None`` and its ``precision`` counts *absolute* digits: it is
known to vanish modulo ``p**precision``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .arith import (
    DomainError,
    RationalLike,
    is_prime,
    nonzero_rational,
    to_rational,
    valuation,
    vp_decompose,
)

DEFAULT_PRECISION = 20
#: extra levels the oracle may deepen past its starting depth before giving up
DEEPENING_SLACK = 8


@dataclass(frozen=True)
class PadicApprox:
    p: int
    valuation: Optional[int]
    mantissa: int
    precision: int

    @classmethod
    def zero(cls, p: int, precision: int = DEFAULT_PRECISION) -> "PadicApprox":
        return cls(p, None, 0, precision)

    @classmethod
    def from_int(cls, n: int, p: int, absolute: int) -> "PadicApprox":
        """The integer n known modulo p**absolute."""
        if absolute <= 0 or n % p**absolute == 0:
            return cls.zero(p, absolute)
        v = valuation(n, p)
        N = absolute - v
        return cls(p, v, (n // p**v) % p**N, N)

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def absolute_precision(self) -> int:
        return self.precision if self.is_zero else self.valuation + self.precision

    def __post_init__(self):
        if self.is_zero:
            if self.mantissa != 0:
                raise ValueError("zero element must have mantissa 0")
        elif self.precision < 1 or self.mantissa % self.p == 0:
            raise ValueError("nonzero p-adic needs a unit mantissa and precision >= 1")

    def _same_prime(self, other: "PadicApprox") -> None:
        if self.p != other.p:
            raise DomainError(f"mixed primes {self.p} and {other.p}")

    def __add__(self, other: "PadicApprox") -> "PadicApprox":
        self._same_prime(other)
        p = self.p
        A = min(self.absolute_precision, other.absolute_precision)
        if self.is_zero or other.is_zero:
            x = other if self.is_zero else self
            if x.is_zero or A <= x.valuation:
                return PadicApprox.zero(p, A)
            N = A - x.valuation
            return PadicApprox(p, x.valuation, x.mantissa % p**N, N)
        v = min(self.valuation, other.valuation)
        if A <= v:
            return PadicApprox.zero(p, A)
        s = self.mantissa * p ** (self.valuation - v) + other.mantissa * p ** (other.valuation - v)
        s %= p ** (A - v)
        if s == 0:
            return PadicApprox.zero(p, A)
        w = valuation(s, p)
        N = A - v - w
        return PadicApprox(p, v + w, (s // p**w) % p**N, N)

    def __neg__(self) -> "PadicApprox":
        if self.is_zero:
            return self
        return PadicApprox(self.p, self.valuation, -self.mantissa % self.p**self.precision, self.precision)

    def __sub__(self, other: "PadicApprox") -> "PadicApprox":
        return self + (-other)

    def __mul__(self, other: "PadicApprox") -> "PadicApprox":
        self._same_prime(other)
        p = self.p
        if self.is_zero and other.is_zero:
            return PadicApprox.zero(p, self.precision + other.precision)
        if self.is_zero or other.is_zero:
            z, x = (self, other) if self.is_zero else (other, self)
            return PadicApprox.zero(p, z.precision + x.valuation)
        N = min(self.precision, other.precision)
        return PadicApprox(p, self.valuation + other.valuation, self.mantissa * other.mantissa % p**N, N)

    def inverse(self) -> "PadicApprox":
        if self.is_zero:
            raise DomainError("cannot invert the zero p-adic number")
        N = self.precision
        return PadicApprox(self.p, -self.valuation, pow(self.mantissa, -1, self.p**N), N)

    def __truediv__(self, other: "PadicApprox") -> "PadicApprox":
        return self * other.inverse()

    def agrees(self, other: "PadicApprox") -> bool:
        """True if the two values coincide to their common guaranteed precision."""
        self._same_prime(other)
        p = self.p
        A = min(self.absolute_precision, other.absolute_precision)
        vals = [x.valuation for x in (self, other) if not x.is_zero]
        if not vals:
            return True
        s = min(vals)
        if A <= s:
            return True

        def scaled(x):
            return 0 if x.is_zero else x.mantissa * p ** (x.valuation - s)

        return (scaled(self) - scaled(other)) % p ** (A - s) == 0

    def residue(self, k: int) -> int:
        """The value mod p**k; requires it to be p-integral and known that far."""
        if k > self.absolute_precision:
            raise DomainError(f"value only known mod {self.p}**{self.absolute_precision}")
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise DomainError("not a p-adic integer")
        return self.mantissa * self.p**self.valuation % self.p**k

    def __str__(self) -> str:
        if self.is_zero:
            return f"O({self.p}^{self.precision})"
        return f"{self.p}^{self.valuation} * {self.mantissa} + O({self.p}^{self.absolute_precision})"


def from_rational(x: RationalLike, p: int, N: int = DEFAULT_PRECISION) -> PadicApprox:
    """Image of x in Q_p with N significant digits."""
    if N < 1:
        raise DomainError("precision must be positive")
    q = to_rational(x)
    if q == 0:
        return PadicApprox.zero(p, N)
    v, u = vp_decompose(q, p)
    m = p**N
    return PadicApprox(p, v, u.numerator * pow(u.denominator, -1, m) % m, N)


def arith(op: str, x: PadicApprox, y: Optional[PadicApprox] = None) -> PadicApprox:
    """Dispatch ``add``, ``mul`` or ``inv``."""
    if op == "inv":
        return x.inverse()
    if y is None:
        raise DomainError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise DomainError(f"unknown p-adic operation {op!r}")


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def is_square(x: RationalLike, p: int) -> bool:
    _check_prime(p)
    v, u = vp_decompose(nonzero_rational(x), p)
    if v % 2:
        return False
    if p == 2:
        return u.numerator * u.denominator % 8 == 1
    r = u.numerator * u.denominator % p
    return pow(r, (p - 1) // 2, p) == 1


def sqrt_mod_prime(a: int, p: int) -> int:
    """Tonelli-Shanks; a must be a nonzero square mod the odd prime p."""
    a %= p
    if pow(a, (p - 1) // 2, p) != 1:
        raise DomainError(f"{a} is a non-residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _unit_sqrt(u: int, p: int, N: int) -> int:
    """A square root of the unit u modulo p**N."""
    if p == 2:
        # bitwise lifting: if r^2 = u mod 2^k (k >= 3) then r or r + 2^(k-1)
        # works mod 2^(k+1); the root is then correct mod 2^(k-1)
        r, k = 1, 3
        while k < N + 2:
            if (r * r - u) % 2 ** (k + 1):
                r += 2 ** (k - 1)
            k += 1
        return r % 2**N
    r = sqrt_mod_prime(u, p)
    k = 1
    while k < N:
        k = min(2 * k, N)
        m = p**k
        r = (r - (r * r - u) * pow(2 * r, -1, m)) % m
    return r


def hensel_sqrt(x: RationalLike, p: int, N: int = DEFAULT_PRECISION) -> PadicApprox:
    """Square root of x in Q_p to N significant digits.

    Of the roots +-r, returns the one with the smaller lowest digit (ties,
    which only happen at p = 2, go to the smaller mantissa).
    """
    q = nonzero_rational(x)
    if not is_square(q, p):
        raise DomainError(f"non-residue: {q} is not a square in Q_{p}")
    v, u = vp_decompose(q, p)
    m = p**N
    unit = u.numerator * pow(u.denominator, -1, p ** (N + 3)) % p ** (N + 3)
    r = _unit_sqrt(unit, p, N)
    r = min(r, -r % m, key=lambda c: (c % p, c))
    return PadicApprox(p, v // 2, r, N)


# --- brute-force isotropy of diagonal ternary forms --------------------------


@dataclass(frozen=True)
class IsotropyWitness:
    """Outcome of the oracle.  When ``solvable``, ``x`` and ``y`` solve
    a*x**2 + b*y**2 = 1 to their stated precision."""

    solvable: bool
    x: Optional[PadicApprox]
    y: Optional[PadicApprox]
    certified: bool
    depth: int


def _square_free_at(c: Fraction, p: int) -> Tuple[int, Fraction]:
    """Write c = n * s**2 with n an integer of p-valuation 0 or 1."""
    v, u = vp_decompose(c, p)
    n = p ** (v % 2) * u.numerator * u.denominator
    s = Fraction(p) ** (v // 2) / u.denominator
    return n, s


def _val_capped(n: int, p: int, cap: int) -> int:
    if n % p**cap == 0:
        return cap
    return valuation(n, p)


def _charts(p: int):
    # primitive points: first unit coordinate normalized to 1
    # (fixed coordinate index, coordinates forced to be divisible by p)
    return [(0, ()), (1, (0,)), (2, (0, 1))]


def _level_one(c, p):
    out = []
    for fixed, divisible in _charts(p):
        free = [i for i in range(3) if i != fixed]
        for d0 in range(p):
            for d1 in range(p):
                pt = [0, 0, 0]
                pt[fixed] = 1
                pt[free[0]], pt[free[1]] = d0, d1
                if any(pt[i] % p for i in divisible):
                    continue
                if (c[0] * pt[0] ** 2 + c[1] * pt[1] ** 2 + c[2] * pt[2] ** 2) % p == 0:
                    out.append((fixed, tuple(pt)))
    return out


def _gradient_valuation(c, pt, p, k):
    best = None
    for i in range(3):
        t = _val_capped(2 * c[i] * pt[i], p, k)
        if best is None or t < best[0]:
            best = (t, i)
    return best


def _lift_exact(c, pt, i, t, p, M):
    """Newton on coordinate i until the form vanishes mod p**M."""
    pt = list(pt)
    mod = p**M
    while True:
        F = sum(c[j] * pt[j] ** 2 for j in range(3))
        if F % mod == 0:
            return pt
        d = 2 * c[i] * pt[i]
        unit = d // p**t
        pt[i] = (pt[i] - (F // p**t) * pow(unit, -1, mod)) % mod


@lru_cache(maxsize=None)
def _ternary_search(c: Tuple[int, int, int], p: int):
    """Search primitive zeros of c0*X^2 + c1*Y^2 + c2*Z^2 level by level mod p^k.

    Returns ``(found, point, k, exact, lift_index, t)``; ``exact`` marks an
    integer zero with Z != 0, found before any lifting.  An empty level
    certifies that no primitive zero exists; a point with F = 0 mod p^k and
    gradient valuation t < k/2 certifies a zero over Z_p by Hensel.
    """
    k0 = 2 * valuation(4 * c[0] * c[1] * c[2], p) + 3
    cap = k0 + DEEPENING_SLACK
    level = _level_one(c, p)
    k = 1
    while True:
        if not level:
            return (False, None, k, False, None, None)
        for _, pt in level:
            if pt[2] and sum(c[j] * pt[j] ** 2 for j in range(3)) == 0:
                return (True, pt, k, True, None, None)
        for _, pt in level:
            t, i = _gradient_valuation(c, pt, p, k)
            if k > 2 * t:
                return (True, pt, k, False, i, t)
        if k >= cap:
            raise RuntimeError(f"isotropy search for {c} at p={p} undecided at depth {k}")
        step = p**k
        nxt_mod = step * p
        nxt = []
        for fixed, pt in level:
            free = [j for j in range(3) if j != fixed]
            for d0 in range(p):
                for d1 in range(p):
                    q = list(pt)
                    q[free[0]] += d0 * step
                    q[free[1]] += d1 * step
                    if (c[0] * q[0] ** 2 + c[1] * q[1] ** 2 + c[2] * q[2] ** 2) % nxt_mod == 0:
                        nxt.append((fixed, tuple(q)))
        level = nxt
        k += 1


def _ternary_point(c, p, N):
    """A zero (X, Y, Z) of the form as integers accurate mod p**M, or None."""
    found, pt, k, exact, i, t = _ternary_search(c, p)
    if not found:
        return None, k, True
    if exact:
        return (tuple(pt), None), k, True
    pt = list(pt)
    if i != 2 and pt[2] % p**k == 0:
        # keep Z nonzero; a shift by p^ceil(k/2) leaves F = 0 mod p^k and the
        # gradient in coordinate i untouched
        pt[2] += p ** ((k + 1) // 2)
    M = N + 2 * t + 2 * k + 2
    pt = _lift_exact(c, pt, i, t, p, M)
    return (tuple(pt), M - t), k, True


def isotropy_oracle(a: RationalLike, b: RationalLike, p: int, N: int = DEFAULT_PRECISION) -> IsotropyWitness:
    """Decide whether a*x**2 + b*y**2 = 1 has a solution in Q_p.

    Works only with the equation itself: a and b are reduced to
    integers of valuation 0 or 1 by removing rational square factors, and
    primitive zeros of a*X**2 + b*Y**2 - Z**2 are searched mod p**k.
    """
    a, b = nonzero_rational(a), nonzero_rational(b)
    _check_prime(p)
    na, sa = _square_free_at(a, p)
    nb, sb = _square_free_at(b, p)
    point, depth, certified = _ternary_point((na, nb, -1), p, N)
    if point is None:
        return IsotropyWitness(False, None, None, certified, depth)
    (X, Y, Z), absolute = point
    if absolute is None:
        # exact rational zero: x = X/(Z*sa), y = Y/(Z*sb)
        x = from_rational(Fraction(X, Z) / sa, p, N)
        y = from_rational(Fraction(Y, Z) / sb, p, N)
        return IsotropyWitness(True, x, y, certified, depth)
    Xp, Yp, Zp = (PadicApprox.from_int(n, p, absolute) for n in (X, Y, Z))
    x = Xp / Zp / from_rational(sa, p, absolute)
    y = Yp / Zp / from_rational(sb, p, absolute)
    return IsotropyWitness(True, x, y, certified, depth)


def norm_test(a: RationalLike, b: RationalLike, p: int) -> bool:
    """Is a a norm from Q_p(sqrt b), i.e. is x**2 - b*y**2 = a solvable?"""
    a, b = nonzero_rational(a), nonzero_rational(b)
    _check_prime(p)
    if is_square(b, p):
        return True
    na, _ = _square_free_at(a, p)
    nb, _ = _square_free_at(b, p)
    # X^2 - b Y^2 - a Z^2 = 0; with b a non-square any zero has Z != 0
    point, _, _ = _ternary_point((1, -nb, -na), p, DEFAULT_PRECISION)
    return point is not None
