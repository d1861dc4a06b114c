"""Command-line interface: series computation, radial limits, property
suites, and table reproduction.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brieskorn import BrieskornData, TripleError, phi
from .cyclotomic import CycloNumber
from .engine import (
    EngineError,
    brieskorn_k,
    zhathat_closed_form,
    zhathat_lattice,
)
from .exact import RationalPhase, parse_phase
from .laurent import LaurentPoly
from .limits import (
    radial_limit,
    radial_limit_consistency,
    radial_limit_derivative,
)
from .plumbing import PlumbingError, PlumbingGraph, spinc_representatives
from .qseries import QSeries
from .verify import SUITES, run_suite


class CliError(Exception):
    pass


def _coeff_str(c) -> str:
    """Rational-looking string for a table/series coefficient."""
    if isinstance(c, LaurentPoly):
        text = str(c)
    elif isinstance(c, CycloNumber):
        text = str(c.as_rational()) if c.is_rational() else str(c)
    else:
        text = str(Fraction(c))
    if " " in text:
        return f"({text})"
    return text


def _term_str(coeff_str: str, exp) -> str:
    if exp == 0:
        return coeff_str
    q = "q" if exp == 1 else f"q^{exp}"
    if coeff_str == "1":
        return q
    if coeff_str == "-1":
        return f"-{q}"
    return f"{coeff_str}*{q}"


def _join_terms(parts: list) -> str:
    out = ""
    for part in parts:
        if not out:
            out = part
        elif part.startswith("-"):
            out += f" - {part[1:]}"
        else:
            out += f" + {part}"
    return out


def _series_text(series: QSeries) -> str:
    series = series.normalized()
    parts = [
        _term_str(_coeff_str(series.terms[e]), e) for e in sorted(series.terms)
    ]
    inner = _join_terms(parts) if parts else "0"
    return f"q^({series.prefactor})*({inner} + ...)"


def _parse_zeta(text: str) -> RationalPhase:
    if text == "symbolic":
        raise CliError("this command needs a concrete root of unity a/N")
    try:
        return parse_phase(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad root-of-unity phase {text!r}: {exc}") from exc


def _load_pair(args):
    """(graph, k) from --brieskorn or --plumbing/--spinc flags."""
    if args.brieskorn:
        bd = BrieskornData.from_triple(*args.brieskorn)
        return bd, (bd.tree, brieskorn_k(bd))
    graph = PlumbingGraph.from_json_file(args.plumbing)
    reps = spinc_representatives(graph)
    idx = args.spinc
    if not (0 <= idx < len(reps)):
        raise CliError(f"--spinc {idx} out of range (have {len(reps)} classes)")
    return None, (graph, reps[idx])


def cmd_series(args) -> int:
    bd, (graph, k) = _load_pair(args)
    t = None if args.t == "symbolic" else _parse_zeta(args.t)
    engine = args.engine
    if engine in ("closed", "both") and bd is None:
        raise CliError("--engine closed needs --brieskorn input")
    out = {}
    if engine in ("closed", "both"):
        out["closed"] = zhathat_closed_form(bd, args.cutoff, t=t).normalized()
    if engine in ("lattice", "both"):
        out["lattice"] = zhathat_lattice(graph, k, args.cutoff, t=t).normalized()
    if engine == "both":
        if out["closed"].agrees_with(out["lattice"]):
            print("engines agree")
        else:
            print("ENGINE MISMATCH")
            for name, series in out.items():
                print(f"{name}: {_series_text(series)}")
            return 1
    series = out.get("closed", out.get("lattice"))
    if args.format == "json":
        print(json.dumps(series.to_json_dict(), indent=2))
    else:
        print(_series_text(series))
    return 0


def cmd_limit(args) -> int:
    if not args.brieskorn:
        raise CliError("limit needs --brieskorn b1 b2 b3")
    bd = BrieskornData.from_triple(*args.brieskorn)
    zeta = _parse_zeta(args.zeta)
    xi = _parse_zeta(args.xi)
    fn = radial_limit_derivative if args.derivative else radial_limit
    value = fn(bd, zeta, xi)
    approx = value.to_complex()
    if args.format == "json":
        payload = {
            "exact": str(value),
            "approx": {"re": approx.real, "im": approx.imag},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"exact:  {value}")
        print(f"approx: {approx:.12g}")
    if args.verify_numeric:
        if args.derivative:
            raise CliError("--verify-numeric applies to the underived series")
        rep = radial_limit_consistency(bd, zeta, xi, t=1e-3)
        print(
            f"numeric (t=1e-3): {rep['numeric']:.12g}   "
            f"raw gap {rep['raw_gap']:.3g}, gap after exact O(t) "
            f"correction {rep['gap']:.3g}"
        )
        if rep["gap"] > 1e-2:
            print("NUMERIC CHECK FAILED")
            return 1
    return 0


def cmd_check(args) -> int:
    try:
        report = run_suite(args.suite, seed=args.seed)
    except KeyError as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        status = "PASS" if report["passed"] else "FAIL"
        print(f"suite {report['name']}: {status}")
        if args.suite == "asymptotic" and report["passed"]:
            for rep in report["details"]["reports"]:
                print(
                    f"  {rep['triple']} R={rep['R']}: fitted order "
                    f"{rep['fitted_order']:.2f}"
                )
        if not report["passed"]:
            print(json.dumps(report["details"].get("failures"), default=str))
    return 0 if report["passed"] else 1


def cmd_table(args) -> int:
    if not args.brieskorn:
        raise CliError("table needs --brieskorn b1 b2 b3")
    bd = BrieskornData.from_triple(*args.brieskorn)
    zetas = [_parse_zeta(z) for z in args.zetas.split(",")]
    four_p = 4 * bd.p
    rho = bd.prefactor
    for zeta in zetas:
        parts = []
        n, n_max_sq = 1, bd.w + four_p * args.cutoff
        while n * n <= n_max_sq:
            poly = phi(n, bd)
            if not poly.is_zero():
                value = poly.evaluate(zeta)
                if not value.is_zero():
                    parts.append(_term_str(_coeff_str(value), (n * n - bd.w) // four_p))
            n += 1
        row = f"- q^({rho})*({_join_terms(parts)} + ...)"
        if bd.is_poincare:
            z = CycloNumber.from_phase(zeta)
            c = z + z.conjugate()
            if not c.is_zero():
                c_str = _coeff_str(c)
                head = {"1": "", "-1": "-"}.get(c_str, c_str + "*")
                row = f"{head}q^({bd.delta + Fraction(1, 120)}) {row}"
        print(f"zeta={zeta}: {row}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zhathat",
        description="Two-variable q-series invariants of negative-definite "
        "plumbed 3-manifolds: lattice sums, Brieskorn closed forms, radial "
        "limits, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--brieskorn", nargs=3, type=int, metavar=("B1", "B2", "B3"))
        p.add_argument("--plumbing", metavar="FILE", help="plumbing graph JSON")
        p.add_argument("--spinc", type=int, default=0, metavar="INDEX")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("series", help="compute the two-variable series")
    add_input(p)
    p.add_argument("--cutoff", type=int, default=60)
    p.add_argument("--t", default="symbolic", help="'symbolic' or a phase a/N")
    p.add_argument("--engine", choices=("closed", "lattice", "both"), default=None)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("limit", help="exact radial limit at roots of unity")
    add_input(p)
    p.add_argument("--zeta", required=True, help="t-value phase a/j")
    p.add_argument("--xi", required=True, help="q-direction phase c/K")
    p.add_argument("--derivative", action="store_true")
    p.add_argument("--verify-numeric", action="store_true")
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("table", help="print rows in the survey-table layout")
    add_input(p)
    p.add_argument("--zetas", default="0/1,1/2,1/3,1/4")
    p.add_argument("--cutoff", type=int, default=60)
    p.set_defaults(fn=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "engine", "x") is None:
        args.engine = "closed" if args.brieskorn else "lattice"
    if getattr(args, "brieskorn", None) is None and getattr(args, "plumbing", None) is None:
        if args.command in ("series", "limit", "table"):
            parser.error("need --brieskorn or --plumbing")
    try:
        return args.fn(args)
    except (CliError, TripleError, PlumbingError, EngineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
