"""Exhaustive verification sweeps behind ``reciprocity verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .arith import Place, primes_below
from .characters import centered_residue, lambda4, lambda8, legendre, legendre_via_reciprocity
from .hilbert import product_check, rousseau_check, symbol_at
from .padic import isotropy_oracle, norm_test
from .residue import EISENSTEIN, GAUSSIAN, ResidueField, primary_primes, reciprocity_check, residue_symbol


@dataclass
class SuiteReport:
    suite: str
    bound: int
    checked: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, **inputs) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(inputs)


def oracle_grid(p: int) -> List[int]:
    """Arguments +-{1, 2, 3, 5, 6, 7, 10, p, 2p, 3p}, deduplicated."""
    base = {1, 2, 3, 5, 6, 7, 10, p, 2 * p, 3 * p}
    return sorted(s * v for v in base for s in (1, -1))


def suite_qr(bound: int) -> SuiteReport:
    rep = SuiteReport("qr", bound)
    odd = primes_below(bound)[1:]
    for p in odd:
        rep.check(legendre(-1, p) == lambda4(p), law="first supplement", p=p)
        rep.check(legendre(2, p) == lambda8(p), law="second supplement", p=p)
        for q in odd:
            if q != p:
                rep.check(
                    legendre(q, p) == legendre(centered_residue(lambda4(p) * p, q), q),
                    law="main", p=p, q=q,
                )
        for a in range(-p // 2, p // 2 + 1):
            if a % p:
                rep.check(legendre_via_reciprocity(a, p) == legendre(a, p), law="descent", a=a, p=p)
    return rep


def suite_product(bound: int, spot_primes: int = 50) -> SuiteReport:
    rep = SuiteReport("product", bound)
    spots = primes_below(spot_primes)
    values = [x for x in range(-bound, bound + 1) if x]
    for a in values:
        for b in values:
            report = product_check(a, b)
            rep.check(report.product == 1, a=a, b=b, product=report.product)
            listed = {e.place.prime for e in report.entries}
            for p in spots:
                if p not in listed:
                    rep.check(symbol_at(a, b, Place(p)) == 1, a=a, b=b, off_support=p)
    return rep


def suite_oracle(bound: int) -> SuiteReport:
    rep = SuiteReport("oracle", bound)
    for p in primes_below(bound):
        grid = oracle_grid(p)
        for a in grid:
            for b in grid:
                s = symbol_at(a, b, Place(p))
                w = isotropy_oracle(a, b, p)
                rep.check(w.certified and w.solvable == (s == 1), a=a, b=b, p=p, symbol=s, oracle=w.solvable)
                rep.check(norm_test(a, b, p) == (s == 1), a=a, b=b, p=p, symbol=s, norm="mismatch")
    return rep


def suite_rousseau(bound: int) -> SuiteReport:
    rep = SuiteReport("rousseau", bound)
    odd = primes_below(bound)[1:]
    for p in odd:
        for q in odd:
            if p != q:
                lhs, rhs = rousseau_check(p, q)
                closed = (-1) ** ((p - 1) // 2 * ((q - 1) // 2))
                rep.check(lhs == rhs == closed, p=p, q=q, lhs=lhs, rhs=rhs)
    return rep


def _suite_power(name: str, ring: str, m: int, bound: int) -> SuiteReport:
    rep = SuiteReport(name, bound)
    primes = primary_primes(ring, bound)
    for pi in primes:
        for theta in primes:
            if pi != theta:
                lhs, rhs = reciprocity_check(pi, theta, m)
                rep.check(lhs == rhs, pi=str(pi), theta=str(theta), lhs=lhs.k, rhs=rhs.k)
        field_ = ResidueField(pi)
        powers = field_.mth_powers(m)
        for x in field_.elements():
            if x:
                trivial = residue_symbol(x, pi, m).k == 0
                rep.check(trivial == (field_.canonical(x) in powers), pi=str(pi), alpha=str(x))
    return rep


def suite_cubic(bound: int) -> SuiteReport:
    return _suite_power("cubic", EISENSTEIN, 3, bound)


def suite_quartic(bound: int) -> SuiteReport:
    return _suite_power("quartic", GAUSSIAN, 4, bound)


SUITES: Dict[str, Callable[[int], SuiteReport]] = {
    "qr": suite_qr,
    "product": suite_product,
    "oracle": suite_oracle,
    "rousseau": suite_rousseau,
    "cubic": suite_cubic,
    "quartic": suite_quartic,
}

DEFAULT_BOUNDS = {"qr": 200, "product": 30, "oracle": 14, "rousseau": 50, "cubic": 150, "quartic": 150}
