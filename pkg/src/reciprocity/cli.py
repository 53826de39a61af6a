"""Command-line entry point: ``reciprocity <command> ...``.

Exit codes: 0 ok, 1 verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .arith import DomainError, Place, nonzero_rational, to_rational
from .characters import CHARACTERS_AT_2, legendre
from .hilbert import product_check, rousseau_check, symbol_at
from .padic import PadicApprox, hensel_sqrt, isotropy_oracle, norm_test
from .residue import RING_FOR_M, RootOfUnity, parse_quadint, reciprocity_check, residue_symbol
from .verify import DEFAULT_BOUNDS, SUITES

EXIT_CODES = {"ok": 0, "verification-failed": 1, "usage-error": 2}


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Dict[str, Any] = field(default_factory=dict)
    text: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-5/6" and "-3+2i" through as values rather than option flags
        self._negative_number_matcher = re.compile(r"^-\d[\d/+\-iw]*$")

    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def _rat(q: Fraction) -> str:
    return str(q)


def _padic_json(x: Optional[PadicApprox]):
    if x is None:
        return None
    return {"p": x.p, "valuation": x.valuation, "mantissa": x.mantissa, "precision": x.precision}


def _root_json(r: RootOfUnity):
    return {"m": r.m, "k": r.k}


def _rational_arg(text: str) -> Fraction:
    return nonzero_rational(to_rational(text))


def build_parser() -> _Parser:
    parser = _Parser(prog="reciprocity", description="Reciprocity-law symbols over Q, Q(i) and Q(w).")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("legendre", help="Legendre character lambda_p(a)")
    p.add_argument("a")
    p.add_argument("p", type=int)

    p = sub.add_parser("character", help="a character of Z_(2)^x")
    p.add_argument("--which", choices=sorted(CHARACTERS_AT_2), required=True)
    p.add_argument("a")

    p = sub.add_parser("hilbert", help="Hilbert symbol (a,b)_v")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--place", required=True, help="inf or a prime")

    p = sub.add_parser("product", help="Hilbert symbols over the support and their product")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("rousseau", help="Rousseau's group-product computation")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("padic-sqrt", help="square root in Q_p")
    p.add_argument("x")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-N", type=int, default=20)

    for name, helptext in (("oracle", "solvability of ax^2+by^2=1 in Q_p"), ("norm-test", "is a a norm from Q_p(sqrt b)")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("-p", type=int, required=True)

    p = sub.add_parser("residue", help="cubic or quartic residue symbol")
    p.add_argument("--m", type=int, choices=(3, 4), required=True)
    p.add_argument("--mod", required=True)
    p.add_argument("--arg", required=True)

    p = sub.add_parser("reciprocity", help="both sides of cubic/quartic reciprocity")
    p.add_argument("--m", type=int, choices=(3, 4), required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--theta", required=True)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--bound", type=int)
    return parser


def _dispatch(args) -> CommandResult:
    cmd = args.command
    if cmd == "legendre":
        s = legendre(_rational_arg(args.a), args.p)
        return CommandResult("ok", {"inputs": {"a": args.a, "p": args.p}, "result": s}, _sign(s))

    if cmd == "character":
        s = CHARACTERS_AT_2[args.which](_rational_arg(args.a))
        return CommandResult("ok", {"inputs": {"which": args.which, "a": args.a}, "result": s}, _sign(s))

    if cmd == "hilbert":
        place = Place.parse(args.place)
        s = symbol_at(_rational_arg(args.a), _rational_arg(args.b), place)
        inputs = {"a": args.a, "b": args.b, "place": str(place)}
        return CommandResult("ok", {"inputs": inputs, "result": s}, _sign(s))

    if cmd == "product":
        rep = product_check(_rational_arg(args.a), _rational_arg(args.b))
        entries = [
            {
                "place": "inf" if e.place.is_infinite else e.place.prime,
                "symbol": e.symbol,
                "t": None if e.t_value is None else _rat(e.t_value),
            }
            for e in rep.entries
        ]
        lines = [f"{str(e.place):<6}{_sign(e.symbol)}" for e in rep.entries]
        lines.append(f"{'product':<8}{_sign(rep.product)}")
        status = "ok" if rep.product == 1 else "verification-failed"
        payload = {"inputs": {"a": args.a, "b": args.b}, "result": rep.product, "entries": entries}
        return CommandResult(status, payload, "\n".join(lines))

    if cmd == "rousseau":
        lhs, rhs = rousseau_check(args.p, args.q)
        status = "ok" if lhs == rhs else "verification-failed"
        payload = {"inputs": {"p": args.p, "q": args.q}, "result": {"lhs": lhs, "rhs": rhs}}
        return CommandResult(status, payload, f"lhs {_sign(lhs)}\nrhs {_sign(rhs)}")

    if cmd == "padic-sqrt":
        if args.N < 1:
            raise DomainError("precision -N must be positive")
        r = hensel_sqrt(_rational_arg(args.x), args.p, args.N)
        payload = {"inputs": {"x": args.x, "p": args.p, "N": args.N}, "result": _padic_json(r)}
        return CommandResult("ok", payload, str(r))

    if cmd == "oracle":
        w = isotropy_oracle(_rational_arg(args.a), _rational_arg(args.b), args.p)
        result = {
            "solvable": w.solvable,
            "certified": w.certified,
            "depth": w.depth,
            "x": _padic_json(w.x),
            "y": _padic_json(w.y),
        }
        text = "solvable" if w.solvable else "not solvable"
        if w.solvable:
            text += f"\nx = {w.x}\ny = {w.y}"
        return CommandResult("ok", {"inputs": {"a": args.a, "b": args.b, "p": args.p}, "result": result}, text)

    if cmd == "norm-test":
        ok = norm_test(_rational_arg(args.a), _rational_arg(args.b), args.p)
        payload = {"inputs": {"a": args.a, "b": args.b, "p": args.p}, "result": ok}
        return CommandResult("ok", payload, "true" if ok else "false")

    if cmd == "residue":
        ring = RING_FOR_M[args.m]
        r = residue_symbol(parse_quadint(args.arg, ring), parse_quadint(args.mod, ring), args.m)
        payload = {"inputs": {"m": args.m, "mod": args.mod, "arg": args.arg}, "result": _root_json(r)}
        return CommandResult("ok", payload, str(r))

    if cmd == "reciprocity":
        ring = RING_FOR_M[args.m]
        lhs, rhs = reciprocity_check(parse_quadint(args.pi, ring), parse_quadint(args.theta, ring), args.m)
        status = "ok" if lhs == rhs else "verification-failed"
        payload = {
            "inputs": {"m": args.m, "pi": args.pi, "theta": args.theta},
            "result": {"lhs": _root_json(lhs), "rhs": _root_json(rhs)},
        }
        return CommandResult(status, payload, f"lhs {lhs}\nrhs {rhs}")

    if cmd == "verify":
        bound = DEFAULT_BOUNDS[args.suite] if args.bound is None else args.bound
        rep = SUITES[args.suite](bound)
        lines = [f"suite {rep.suite} bound {rep.bound}: {rep.checked} checks, {len(rep.failures)} failed"]
        lines += ["FAIL " + " ".join(f"{k}={v}" for k, v in f.items()) for f in rep.failures]
        payload = {
            "inputs": {"suite": args.suite, "bound": bound},
            "result": {"checked": rep.checked, "failed": len(rep.failures), "ok": rep.ok},
            "entries": rep.failures,
        }
        return CommandResult("ok" if rep.ok else "verification-failed", payload, "\n".join(lines))

    raise UsageError(f"unknown command {cmd!r}")


def run(argv: List[str]) -> CommandResult:
    argv = list(argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = build_parser().parse_args(argv)
        result = _dispatch(args)
    except UsageError as exc:
        return CommandResult("usage-error", {"error": str(exc)}, str(exc))
    except SystemExit as exc:  # --help
        return CommandResult("ok" if not exc.code else "usage-error")
    except (DomainError, ZeroDivisionError) as exc:
        return CommandResult("usage-error", {"error": str(exc)}, f"error: {exc}")
    result.payload = {"command": args.command, **result.payload}
    if as_json:
        result.text = json.dumps(result.payload, sort_keys=True)
    return result


def main(argv: Optional[List[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.text:
        stream = sys.stderr if result.status == "usage-error" else sys.stdout
        print(result.text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
