"""Command-line surface: quantize, dequantize, star, bracket, wigner, verify.

Exit codes: 0 ok, 1 parse/domain error, 2 verification failure.  Output is
deterministic for identical invocations (suites are seeded, default 0).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import ccr, correspondence as corr, exprio, phase, quasigrid, verify
from .correspondence import SContext
from .exactnum import parse_rational
from .exprio import OPERATOR, PHASE, ParseError


@dataclass
class CommandResult:
    status: str  # 'ok' | 'error'
    payload: object = None
    diagnostics: list = field(default_factory=list)


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _grid_spec(text: str) -> quasigrid.GridSpec:
    parts = text.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            "grid must be 'remin,remax,immin,immax,nre,nim'"
        )
    try:
        return quasigrid.GridSpec(
            float(parts[0]), float(parts[1]), float(parts[2]), float(parts[3]),
            int(parts[4]), int(parts[5]),
        )
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cgstar",
        description="Symbolic and numeric engine for s-parameterized ordering "
        "correspondences and star products.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, s_default="0"):
        p.add_argument("--s", type=_rational, default=_rational(s_default),
                       help="ordering parameter as a rational, e.g. -1/2")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("quantize", help="phase expression -> s-ordered operator")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("dequantize", help="operator expression -> s-symbol")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("star", help="star product of two expressions")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--hatted", action="store_true",
                   help="operator-side product (operands parse as operators)")
    common(p)

    p = sub.add_parser("bracket", help="poisson, star, or deformed bracket")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--kind", choices=("poisson", "star", "deformed"), required=True)
    p.add_argument("--hbar", type=_rational, default=_rational("1"))
    common(p)

    p = sub.add_parser("wigner", help="sample a quasiprobability grid to CSV")
    p.add_argument("--state", required=True,
                   help="fock:n | coherent:re,im | cat:re,im | file:path")
    p.add_argument("--grid", type=_grid_spec, default="-4,4,-4,4,81,81")
    p.add_argument("--dim", type=int, default=60)
    p.add_argument("--out", default="wigner.csv")
    common(p)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--cases", type=int, default=None)
    common(p)
    return top


def _emit(result: CommandResult, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(
            {"status": result.status, "payload": result.payload,
             "diagnostics": result.diagnostics},
            sort_keys=True))
        return
    if result.payload is not None:
        if isinstance(result.payload, str):
            print(result.payload)
        else:
            print(json.dumps(result.payload, sort_keys=True))
    for line in result.diagnostics:
        print(line)


def _poly_payload(p, fmt: str):
    if fmt == "json":
        return exprio.poly_to_json(p)
    return exprio.print_canonical(p)


def _cmd_quantize(args) -> CommandResult:
    f = exprio.parse_poly(args.expr, PHASE)
    out = corr.icg(f, SContext(args.s))
    return CommandResult("ok", _poly_payload(out, args.format))


def _cmd_dequantize(args) -> CommandResult:
    F = exprio.parse_poly(args.expr, OPERATOR)
    out = corr.cg(F, SContext(args.s))
    return CommandResult("ok", _poly_payload(out, args.format))


def _cmd_star(args) -> CommandResult:
    ctx = SContext(args.s)
    if args.hatted:
        F = exprio.parse_poly(args.f, OPERATOR)
        G = exprio.parse_poly(args.g, OPERATOR)
        out = corr.hstar(F, G, ctx)
    else:
        f = exprio.parse_poly(args.f, PHASE)
        g = exprio.parse_poly(args.g, PHASE)
        out = corr.star(f, g, ctx)
    return CommandResult("ok", _poly_payload(out, args.format))


def _cmd_bracket(args) -> CommandResult:
    ctx = SContext(args.s, args.hbar)
    if args.kind == "poisson":
        f = exprio.parse_poly(args.f, PHASE)
        g = exprio.parse_poly(args.g, PHASE)
        out = phase.poisson(f, g, args.hbar)
    elif args.kind == "star":
        f = exprio.parse_poly(args.f, PHASE)
        g = exprio.parse_poly(args.g, PHASE)
        out = corr.star_commutator(f, g, ctx)
    else:
        F = exprio.parse_poly(args.f, OPERATOR)
        G = exprio.parse_poly(args.g, OPERATOR)
        out = corr.deformed_bracket(F, G, ctx)
    return CommandResult("ok", _poly_payload(out, args.format))


def _cmd_wigner(args) -> CommandResult:
    rho = quasigrid.state_build(args.state, args.dim)
    fld = quasigrid.quasiprob(rho, args.s, args.grid)
    quasigrid.write_grid_csv(fld, args.out)
    mass = quasigrid.integrate_grid(fld)
    return CommandResult(
        "ok", args.out,
        [f"grid_integral = {mass.real:.12g}{mass.imag:+.3g}i"],
    )


def _cmd_verify(args) -> CommandResult:
    results = verify.run_suite(args.suite, seed=args.seed, cases=args.cases)
    diagnostics = [r.line() for r in results]
    failures = [msg for r in results for msg in r.failures]
    status = "ok" if not failures else "error"
    return CommandResult(status, f"suite {args.suite}: "
                         f"{'pass' if not failures else 'FAIL'}",
                         diagnostics + failures[:20])


_HANDLERS = {
    "quantize": _cmd_quantize,
    "dequantize": _cmd_dequantize,
    "star": _cmd_star,
    "bracket": _cmd_bracket,
    "wigner": _cmd_wigner,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        result = _HANDLERS[args.command](args)
    except (ParseError, ValueError, ZeroDivisionError, OverflowError, OSError) as exc:
        _emit(CommandResult("error", None, [f"error: {exc}"]), args.format)
        return 1
    _emit(result, args.format)
    return 0 if result.status == "ok" else 2


if __name__ == "__main__":
    sys.exit(main())
