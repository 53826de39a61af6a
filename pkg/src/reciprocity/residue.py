"""Gaussian and Eisenstein integers, primary primes, and the cubic and
quartic power residue symbols.

Eisenstein integers are written a + b*w with w**2 + w + 1 = 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Tuple

from .arith import DomainError, is_prime

GAUSSIAN = "gaussian"
EISENSTEIN = "eisenstein"

RING_FOR_M = {4: GAUSSIAN, 3: EISENSTEIN}


def _round_div(a: int, b: int) -> int:
    # nearest integer to a/b for b > 0, ties upward
    return (2 * a + b) // (2 * b)


@dataclass(frozen=True)
class QuadInt:
    ring: str
    a: int
    b: int = 0

    def __post_init__(self):
        if self.ring not in (GAUSSIAN, EISENSTEIN):
            raise DomainError(f"unknown ring {self.ring!r}")

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(self.ring, other, 0)
        if other.ring != self.ring:
            raise DomainError("operands live in different rings")
        return other

    def __add__(self, other):
        o = self._coerce(other)
        return QuadInt(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        if self.ring == GAUSSIAN:
            return QuadInt(GAUSSIAN, a * c - b * d, a * d + b * c)
        # w^2 = -1 - w
        return QuadInt(EISENSTEIN, a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = QuadInt(self.ring, 1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "QuadInt":
        if self.ring == GAUSSIAN:
            return QuadInt(GAUSSIAN, self.a, -self.b)
        return QuadInt(EISENSTEIN, self.a - self.b, -self.b)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __str__(self) -> str:
        sym = "i" if self.ring == GAUSSIAN else "w"
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        coeff = "" if abs(self.b) == 1 else str(abs(self.b))
        return f"{self.a}{sign}{coeff}{sym}"


def qnorm(z: QuadInt) -> int:
    if z.ring == GAUSSIAN:
        return z.a * z.a + z.b * z.b
    return z.a * z.a - z.a * z.b + z.b * z.b


def qdivmod(x: QuadInt, y: QuadInt) -> Tuple[QuadInt, QuadInt]:
    """Euclidean division with the quotient rounded to the nearest lattice point."""
    y = x._coerce(y)
    n = qnorm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero in " + x.ring + " integers")
    num = x * y.conj()
    q = QuadInt(x.ring, _round_div(num.a, n), _round_div(num.b, n))
    return q, x - q * y


def qmod(x: QuadInt, y: QuadInt) -> QuadInt:
    return qdivmod(x, y)[1]


def divides(y: QuadInt, x: QuadInt) -> bool:
    return not qmod(x, y)


def qgcd(x: QuadInt, y: QuadInt) -> QuadInt:
    while y:
        x, y = y, qmod(x, y)
    return x


def units(ring: str) -> List[QuadInt]:
    if ring == GAUSSIAN:
        return [QuadInt(GAUSSIAN, 1, 0), QuadInt(GAUSSIAN, 0, 1), QuadInt(GAUSSIAN, -1, 0), QuadInt(GAUSSIAN, 0, -1)]
    w = QuadInt(EISENSTEIN, 0, 1)
    return [s * w**k for k in range(3) for s in (1, -1)]


def root_of_unity(m: int) -> QuadInt:
    """The generator i (m = 4) or w (m = 3)."""
    return QuadInt(RING_FOR_M[m], 0, 1)


def ramified_prime(ring: str) -> QuadInt:
    if ring == GAUSSIAN:
        return QuadInt(GAUSSIAN, 1, 1)
    return QuadInt(EISENSTEIN, 1, -1)


def _has_root_mod(ring: str, q: int) -> bool:
    coeffs = (1, 0, 1) if ring == GAUSSIAN else (1, 1, 1)  # x^2 + 1, x^2 + x + 1
    return any((x * x * coeffs[0] + x * coeffs[1] + coeffs[2]) % q == 0 for x in range(q))


def is_qprime(z: QuadInt) -> bool:
    """Primes are elements of rational-prime norm, or associates of inert rational primes."""
    n = qnorm(z)
    if n < 2:
        return False
    if is_prime(n):
        return True
    for u in units(z.ring):
        w = z * u
        if w.b == 0 and w.a > 0:
            return is_prime(w.a) and not _has_root_mod(z.ring, w.a)
    return False


def _check_m(m: int, z: QuadInt) -> None:
    if m not in RING_FOR_M:
        raise DomainError("m must be 3 or 4")
    if z.ring != RING_FOR_M[m]:
        raise DomainError(f"m = {m} needs {RING_FOR_M[m]} integers")


def _check_good_prime(pi: QuadInt) -> None:
    if not is_qprime(pi):
        raise DomainError(f"{pi} is not prime")
    if divides(pi, ramified_prime(pi.ring)):
        raise DomainError(f"ramified: {pi} divides {ramified_prime(pi.ring)}")


def is_primary(z: QuadInt) -> bool:
    """Eisenstein: z = 2 mod 3.  Gaussian: z = 1 mod (1+i)**3."""
    if z.ring == EISENSTEIN:
        return z.a % 3 == 2 and z.b % 3 == 0
    return divides(ramified_prime(GAUSSIAN) ** 3, z - 1)


def primary_associate(pi: QuadInt, m: int = None) -> QuadInt:
    if m is not None:
        _check_m(m, pi)
    _check_good_prime(pi)
    found = [u * pi for u in units(pi.ring) if is_primary(u * pi)]
    if len(found) != 1:
        raise RuntimeError(f"{pi} has {len(found)} primary associates")
    return found[0]


class RootOfUnity(NamedTuple):
    m: int
    k: int

    def __mul__(self, other):
        if self.m != other.m:
            raise DomainError("roots of unity of different orders")
        return RootOfUnity(self.m, (self.k + other.k) % self.m)

    def __str__(self) -> str:
        if self.m == 4:
            return ("1", "i", "-1", "-i")[self.k]
        return "1" if self.k == 0 else f"w^{self.k}"


def residue_symbol(alpha: QuadInt, pi: QuadInt, m: int) -> RootOfUnity:
    """The m-th root of unity congruent to alpha**((N(pi)-1)/m) mod pi."""
    _check_m(m, pi)
    alpha = pi._coerce(alpha)
    _check_good_prime(pi)
    if divides(pi, alpha):
        raise DomainError(f"not coprime: {pi} divides {alpha}")
    e = (qnorm(pi) - 1) // m
    r = QuadInt(pi.ring, 1)
    base = qmod(alpha, pi)
    while e:
        if e & 1:
            r = qmod(r * base, pi)
        base = qmod(base * base, pi)
        e >>= 1
    zeta = root_of_unity(m)
    hits = [k for k in range(m) if divides(pi, r - zeta**k)]
    if len(hits) != 1:
        raise RuntimeError(f"cannot identify {r} mod {pi} among the {m}-th roots of unity")
    return RootOfUnity(m, hits[0])


class ReciprocityResult(NamedTuple):
    lhs: RootOfUnity
    rhs: RootOfUnity


def reciprocity_check(pi: QuadInt, theta: QuadInt, m: int) -> ReciprocityResult:
    """Both sides of the cubic (m = 3) or quartic (m = 4) law for primary primes.

    lhs is the symbol of pi modulo theta; rhs is the symbol of theta modulo
    pi, times (-1)**((N(pi)-1)/4 * (N(theta)-1)/4) when m = 4.
    """
    _check_m(m, pi)
    theta = pi._coerce(theta)
    for z in (pi, theta):
        _check_good_prime(z)
        if not is_primary(z):
            raise DomainError(f"{z} is not primary; normalize it first")
    if divides(pi, theta):
        raise DomainError(f"{pi} and {theta} are associates")
    lhs = residue_symbol(pi, theta, m)
    rhs = residue_symbol(theta, pi, m)
    if m == 4 and ((qnorm(pi) - 1) // 4 * ((qnorm(theta) - 1) // 4)) % 2:
        rhs = rhs * RootOfUnity(4, 2)
    return ReciprocityResult(lhs, rhs)


def primary_primes(ring: str, bound: int) -> List[QuadInt]:
    """Primary primes of norm < bound, away from the ramified prime, by ascending norm."""
    seen: Dict[Tuple[int, int], QuadInt] = {}
    r = int(bound**0.5) + 2
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            z = QuadInt(ring, a, b)
            n = qnorm(z)
            if n >= bound or not is_qprime(z) or divides(z, ramified_prime(ring)):
                continue
            if is_primary(z):
                seen[(a, b)] = z
    return sorted(seen.values(), key=lambda z: (qnorm(z), z.a, z.b))


class ResidueField:
    """F_{N(pi)} realised with canonical representatives for hashing."""

    def __init__(self, pi: QuadInt):
        _check_good_prime(pi)
        self.pi = pi
        n = qnorm(pi)
        if is_prime(n):
            # split: every class contains an integer; find r with pi | (gen - r)
            gen = QuadInt(pi.ring, 0, 1)
            self.p = n
            self.split_root = next(r for r in range(n) if divides(pi, gen - r))
        else:
            self.p = next(u * pi for u in units(pi.ring) if (u * pi).b == 0 and (u * pi).a > 0).a
            self.split_root = None

    def canonical(self, z: QuadInt):
        if self.split_root is not None:
            return (z.a + z.b * self.split_root) % self.p
        return (z.a % self.p, z.b % self.p)

    def elements(self) -> List[QuadInt]:
        ring = self.pi.ring
        if self.split_root is not None:
            return [QuadInt(ring, a) for a in range(self.p)]
        return [QuadInt(ring, a, b) for a in range(self.p) for b in range(self.p)]

    def mth_powers(self, m: int) -> set:
        """Canonical forms of all nonzero m-th powers, by enumeration."""
        return {self.canonical(x**m) for x in self.elements() if x}


_LITERAL = re.compile(r"^([+-]?\d+)(?:([+-])(\d*)([iw]))?$|^([+-]?)(\d*)([iw])$")


def parse_quadint(text: str, ring: str) -> QuadInt:
    """Parse ``a``, ``a+bi``, ``a-bi``, ``a+bw``, ``a-bw`` (whitespace ignored)."""
    s = re.sub(r"\s+", "", text)
    m = _LITERAL.match(s)
    if not m:
        raise DomainError(f"cannot parse {text!r} as a quadratic integer")
    if m.group(1) is not None:
        a = int(m.group(1))
        if m.group(4) is None:
            return QuadInt(ring, a, 0)
        b = int(m.group(3) or "1") * (-1 if m.group(2) == "-" else 1)
        sym = m.group(4)
    else:
        a = 0
        b = int(m.group(6) or "1") * (-1 if m.group(5) == "-" else 1)
        sym = m.group(7)
    want = "i" if ring == GAUSSIAN else "w"
    if sym != want:
        raise DomainError(f"{text!r} uses {sym!r} but {ring} integers use {want!r}")
    return QuadInt(ring, a, b)
