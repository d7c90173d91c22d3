"""Command-line front end: ``ospxi verify <suite>`` and ``ospxi eval "<expr>"``."""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import dual, frt, hopf, repn
from .expr import Context, ExprError, eval_expr, render_value
from .report import Check, Report, emit_report, timed

SUITES = ("hopf", "ybe", "frt", "dual", "scaling", "all")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def tool_version() -> str:
    try:
        from importlib.metadata import version

        return version("artifact")
    except Exception:
        return "0.1.0"


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _spin(text: str) -> Fraction:
    try:
        s = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a spin like 0.5 or 1/2, got {text!r}") from None
    if s < 0 or (2 * s).denominator != 1:
        raise argparse.ArgumentTypeError(f"spin must be a nonnegative half-integer, got {text!r}")
    return s


def _default_order() -> int:
    env = os.environ.get("OSPXI_ORDER")
    if env is None:
        return hopf.DEFAULT_ORDER
    return _positive_int(env)


# -- suites -----------------------------------------------------------------

def suite_hopf(order: int, **_) -> list[Check]:
    checks = timed(lambda: hopf.verify_twist_axioms(order))
    checks += timed(lambda: hopf.verify_closed_coproducts(order))
    checks += timed(lambda: hopf.verify_antipode(order))
    checks += timed(lambda: hopf.verify_R_properties(order))
    return checks


def suite_ybe(order: int, spin: Fraction, **_) -> list[Check]:
    checks = timed(lambda: repn.verify_representations())
    if spin == Fraction(1, 2):
        checks += timed(lambda: repn.verify_fundamental_R(order))
    else:
        rep = repn.build_irrep(spin)
        R = repn.universal_R_matrix(rep)
        checks += timed(lambda: repn.verify_matrix_properties(R, rep.parity, f"Rmat.s={spin}"))
    return checks


def suite_frt(degree: int, nu: int, **_) -> list[Check]:
    return timed(lambda: frt.verify_frt(max(degree, 4), nu))


def suite_dual(order: int, degree: int, nu: int, **_) -> list[Check]:
    return timed(lambda: dual.verify_dual(degree, nu, order))


def suite_scaling(**_) -> list[Check]:
    return timed(repn.verify_scaling)


SUITE_FUNCS: dict[str, Callable[..., list[Check]]] = {
    "hopf": suite_hopf,
    "ybe": suite_ybe,
    "frt": suite_frt,
    "dual": suite_dual,
    "scaling": suite_scaling,
}


def run_suite(name: str, order: int = hopf.DEFAULT_ORDER, degree: int = dual.DEFAULT_DEGREE,
              nu: int = dual.DEFAULT_M, spin: Fraction = Fraction(1, 2)) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    checks: list[Check] = []
    for s in names:
        for c in SUITE_FUNCS[s](order=order, degree=degree, nu=nu, spin=spin):
            if name == "all":
                c.id = f"{s}:{c.id}"
            checks.append(c)
    config = {"order": order, "degree": degree, "nu": nu, "spin": str(spin)}
    return Report(name, checks, config, tool_version())


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ospxi", description="Exact checks for the twisted osp(1|2) Hopf superalgebra.")
    p.add_argument("--version", action="version", version=f"ospxi {tool_version()}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--order", type=_positive_int, default=None, help="xi-truncation order (default 6 or $OSPXI_ORDER)")
    v.add_argument("--degree", type=_positive_int, default=dual.DEFAULT_DEGREE, help="pairing degree bound (default 4)")
    v.add_argument("--nu", type=_positive_int, default=dual.DEFAULT_M, help="nu-truncation of the dual (default 8)")
    v.add_argument("--spin", type=_spin, default=Fraction(1, 2), help="representation for the ybe suite (default 1/2)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="append per-check timings (json only)")

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expr")
    e.add_argument("--order", type=_positive_int, default=None)
    e.add_argument("--nu", type=_positive_int, default=dual.DEFAULT_M)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        order = args.order if args.order is not None else _default_order()
    except argparse.ArgumentTypeError as exc:
        parser.error(f"OSPXI_ORDER: {exc}")
    if args.command == "eval":
        try:
            value = eval_expr(args.expr, Context(order, args.nu))
        except ExprError as exc:
            print(f"ospxi: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(render_value(value))
        return EXIT_OK
    report = run_suite(args.suite, order, args.degree, args.nu, args.spin)
    if args.format == "json":
        data = report.to_json(timings=args.timings).encode("ascii")
    else:
        data = emit_report(report, "text")
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
