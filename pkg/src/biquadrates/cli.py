"""Command-line front end: verify, search, families, curve pipeline, Pell ladder.

Exit codes are a stable contract: 0 success, 1 domain failure (degenerate
parameter, failed verification), 2 usage error.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from biquadrates.curve import (
    CurvePoint,
    curve_from_parameter,
    extra_point,
    mul_scalar,
    on_curve,
    point_P,
)
from biquadrates.derive import (
    PipelineError,
    _auto_sign,
    evaluate_param,
    solution_from_nP,
    solution_from_quartic_point,
    weierstrass_to_quartic,
)
from biquadrates.exact import (
    CanonicalKey,
    DegenerateSolutionError,
    SolutionSix,
    canonicalize,
    check_solution,
)
from biquadrates.families import FAMILIES
from biquadrates.identity import ALL_VERIFIERS
from biquadrates.pell import pell3_nth, pell_to_solution
from biquadrates.poly import PoleError, RatFn, format_poly
from biquadrates.search import SearchConfig, search

_DOMAIN_ERRORS = (DegenerateSolutionError, PipelineError, PoleError,
                  ZeroDivisionError, ValueError)


@dataclass(frozen=True)
class OutputRecord:
    """One emitted solution with its canonical key and provenance."""

    solution: SolutionSix
    canonical: CanonicalKey
    source: str
    parameter: Optional[str] = None


def _make_record(sol: SolutionSix, source: str, parameter=None) -> OutputRecord:
    if not check_solution(sol):
        raise PipelineError("refusing to emit a tuple that fails the equation")
    param = None if parameter is None else str(parameter)
    return OutputRecord(sol, canonicalize(sol), source, param)


def _key_text(key: CanonicalKey) -> str:
    pairs = [key.xpair, key.ypair, tuple(str(z) for z in key.zpair)]
    return " ".join("(%s,%s)" % (a, b) for a, b in pairs)


def _record_json(rec: OutputRecord) -> str:
    return json.dumps({
        "solution": [str(v) for v in rec.solution],
        "canonical": {
            "xpair": [str(v) for v in rec.canonical.xpair],
            "ypair": [str(v) for v in rec.canonical.ypair],
            "zpair": [str(v) for v in rec.canonical.zpair],
        },
        "source": rec.source,
        "parameter": rec.parameter,
    })


def _print_record(rec: OutputRecord, as_json: bool):
    if as_json:
        print(_record_json(rec))
        return
    print("solution: %s" % " ".join(str(v) for v in rec.solution))
    print("canonical: %s" % _key_text(rec.canonical))
    print("source: %s" % rec.source)
    if rec.parameter is not None:
        print("parameter: %s" % rec.parameter)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError("must be >= 1")
    return value


def cmd_verify(ns) -> int:
    sol = SolutionSix(*ns.values)
    lhs = (sol.x1**4 + sol.x2**4) * (sol.y1**4 + sol.y2**4)
    rhs = sol.z1**4 + sol.z2**4
    print("lhs = %d" % lhs)
    print("rhs = %d" % rhs)
    if lhs == rhs:
        print("PASS")
        return 0
    print("FAIL (difference %d)" % (lhs - rhs))
    return 1


def cmd_search(ns) -> int:
    try:
        cfg = SearchConfig(bx=ns.bx, by=ns.by, strategy=ns.strategy,
                           threads=ns.threads)
    except ValueError as exc:
        print("search: %s" % exc, file=sys.stderr)
        return 2
    results = search(cfg)
    if ns.csv:
        print("x1,x2,y1,y2,z1,z2")
        for sol in results:
            print(",".join(str(v) for v in sol))
    elif ns.json:
        for sol in results:
            print(_record_json(_make_record(sol, "search")))
    else:
        for sol in results:
            print(" ".join(str(v) for v in sol))
    return 0


def _print_family(ps, descending: bool) -> int:
    names = ("x1", "x2", "y1", "y2", "z1", "z2")
    for name, poly in zip(names, ps.polys()):
        print("%s = %s" % (name, format_poly(poly, descending=descending)))
    print("degrees: %s" % " ".join(str(d) for d in ps.degrees()))
    if ps.residual().is_zero:
        print("residual: 0")
        return 0
    print("residual: nonzero", file=sys.stderr)
    return 1


def _emit_family_value(ps, value: Fraction, source: str, as_json: bool) -> int:
    try:
        sol = evaluate_param(ps, value)
    except _DOMAIN_ERRORS as exc:
        print("%s: %s" % (source, exc), file=sys.stderr)
        return 1
    if 0 in sol:
        print("%s: degenerate at parameter %s (zero coordinate)"
              % (source, value), file=sys.stderr)
        return 1
    _print_record(_make_record(sol, source, value), as_json)
    return 0


def cmd_family(ns) -> int:
    ps = FAMILIES[ns.name]()
    if ns.symbolic:
        return _print_family(ps, ns.descending)
    return _emit_family_value(ps, ns.param, "family_" + ns.name, ns.json)


def cmd_curve(ns) -> int:
    sign = ns.sign
    try:
        if sign == "auto":
            sign = _auto_sign(ns.n)
        if ns.symbolic:
            fam = solution_from_nP(ns.n, sign=sign)
            print("sign: %s" % sign)
            return _print_family(fam, ns.descending)
        m0 = ns.m
        c = curve_from_parameter(m0)
        w = mul_scalar(c, ns.n, point_P(m0))
        print("nP: (%s, %s)" % (w.x, w.y))
        print("sign: %s" % sign)
        if sign == "minus":
            w = CurvePoint(w.x, -w.y)
        print("curve point: (%s, %s)" % (w.x, w.y))
        qp = weierstrass_to_quartic(m0, w)
        print("quartic point: (%s, %s)" % (qp.u, qp.v))
        u = Fraction(qp.u)
        print("U = p/q: p = %d, q = %d" % (u.numerator, u.denominator))
        sol = solution_from_quartic_point(qp)
    except _DOMAIN_ERRORS as exc:
        print("curve: %s" % exc, file=sys.stderr)
        return 1
    _print_record(_make_record(sol, "curve_nP", m0), ns.json)
    return 0


def cmd_pell(ns) -> int:
    if ns.k is not None:
        sol = pell_to_solution(pell3_nth(ns.k))
        _print_record(_make_record(sol, "pell", ns.k), ns.json)
        return 0
    t = ns.t
    if t * t == 3:
        print("pell: pole at t^2 = 3", file=sys.stderr)
        return 1
    return _emit_family_value(FAMILIES["eq26"](), t, "family_eq26", ns.json)


def _selftest_curve_closure() -> bool:
    mm = RatFn.gen("m")
    sym = curve_from_parameter(mm)
    if not (on_curve(sym, point_P(mm)) and on_curve(sym, extra_point(mm))):
        return False
    for m0 in (1, 2):
        c = curve_from_parameter(m0)
        p = point_P(m0)
        for pt in (mul_scalar(c, 2, p), mul_scalar(c, 3, p), extra_point(m0)):
            if not on_curve(c, pt):
                return False
    return True


def _selftest_high_multiple() -> bool:
    fam = solution_from_nP(3)
    degs = fam.degrees()
    return fam.residual().is_zero and degs[4] >= 120 and degs[5] >= 120


def cmd_selftest(ns) -> int:
    checks = [(name, fn) for name, fn in ALL_VERIFIERS.items()]
    checks.append(("curve_closure", _selftest_curve_closure))
    if not ns.quick:
        checks.append(("curve_high_multiple", _selftest_high_multiple))
    failed = []
    for name, fn in checks:
        ok = bool(fn())
        print("%s: %s" % (name, "PASS" if ok else "FAIL"))
        if not ok:
            failed.append(name)
    if failed:
        print("selftest failed: %s" % ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquadrates",
        description="Products of sums of two fourth powers that are again "
                    "sums of two fourth powers: search, verify, derive.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check six integers against the equation")
    p.add_argument("values", nargs=6, type=int, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="enumerate solutions within bounds")
    p.add_argument("--bx", type=int, required=True, help="largest x2")
    p.add_argument("--by", type=int, required=True, help="largest y2")
    p.add_argument("--strategy", choices=("root_loop", "sum_table"),
                   default="root_loop")
    p.add_argument("--threads", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("family", help="evaluate or print a published family")
    p.add_argument("name", choices=tuple(sorted(FAMILIES)))
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--param", type=Fraction, metavar="a/b")
    mode.add_argument("--symbolic", action="store_true")
    p.add_argument("--descending", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("curve", help="derive a solution from a curve multiple")
    p.add_argument("--n", type=_positive_int, required=True,
                   help="which multiple of the base point")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--m", type=Fraction, metavar="a/b")
    mode.add_argument("--symbolic", action="store_true")
    p.add_argument("--sign", choices=("auto", "plus", "minus"), default="auto")
    p.add_argument("--descending", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("pell", help="solutions from the Pell ladder or slice")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--k", type=_positive_int, help="ladder index")
    mode.add_argument("--t", type=Fraction, metavar="a/b",
                      help="rational slice parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("selftest", help="run the symbolic verifier suite")
    p.add_argument("--quick", action="store_true",
                   help="skip the high-multiple degree check")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
