"""Command-line interface: ``qpoin <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, hopf, little, pl
from .algebra import RewriteLimitError, commutator, confluence_fuzz, star
from .parser import ParseError, parse_element
from .tables import IDX

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _qvalues(text: str) -> tuple:
    try:
        vals = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not vals or any(v <= 1 for v in vals):
        raise argparse.ArgumentTypeError("q values must be > 1")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qpoin", description="Normal ordering and verification for the q-Poincare algebra.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = with_format(sub.add_parser("normalize", help="normal form of an expression"))
    p.add_argument("expr")
    p = with_format(sub.add_parser("commutator", help="normal form of [x, y]"))
    p.add_argument("x")
    p.add_argument("y")
    p = with_format(sub.add_parser("star", help="image under the *-involution"))
    p.add_argument("expr")
    p = with_format(sub.add_parser("coproduct", help="coproduct of a Lorentz element"))
    p.add_argument("expr")
    p = with_format(sub.add_parser("pl", help="components of the Pauli-Lubanski vector"))
    p.add_argument("--component", choices=tuple(IDX), help="one component: 0, -, + or 3")
    with_format(sub.add_parser("casimir", help="the spin Casimir W^tau W_tau"))
    p = with_format(sub.add_parser("little", help="little algebra report"))
    p.add_argument("--case", choices=("massive", "massless"), required=True)

    p = with_format(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", default="all", choices=("all", *checks.SUITES))
    _add_run_flags(p)

    p = with_format(sub.add_parser("fuzz", help="confluence fuzz of the raw rewrite rules"))
    _add_run_flags(p)
    return ap


def _add_run_flags(p):
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=checks.DEFAULT_TRIALS)
    p.add_argument("--max-len", type=int, default=checks.DEFAULT_MAX_LEN)
    p.add_argument("--qvalues", type=_qvalues, default=checks.DEFAULT_QVALUES,
                   help="comma-separated q values for the spin-rep checks")
    p.add_argument("--spin-tol", type=float, default=checks.SPIN_TOL)
    p.add_argument("--slope-tol", type=float, default=0.1)


def _emit(args, value, text: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(value, indent=2))
    else:
        print(text if text is not None else value)


def _report_text(report: checks.Report) -> str:
    width = max((len(c["id"]) for c in report.checks), default=10)
    lines = []
    for c in report.checks:
        line = f"{c['status']:<5}  {c['id']:<{width}}  {c['ms']:>9.3f} ms"
        if c["witness"]:
            line += f"  {c['witness'][:200]}"
        lines.append(line)
    n_pass = sum(c["status"] == "pass" for c in report.checks)
    lines.append(f"{n_pass}/{len(report.checks)} checks passed (suite {report.suite}, seed {report.seed})")
    return "\n".join(lines)


def _options(args) -> checks.Options:
    return checks.Options(seed=args.seed, trials=args.trials, max_len=args.max_len,
                          qvalues=tuple(args.qvalues), spin_tol=args.spin_tol, slope_tol=args.slope_tol)


def run_command(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError, RewriteLimitError, ZeroDivisionError) as exc:
        print(f"qpoin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    cmd = args.command
    if cmd in ("normalize", "star", "coproduct"):
        x = parse_element(args.expr)
        if cmd == "star":
            x = star(x)
        elif cmd == "coproduct":
            x = hopf.coproduct(x)
        _emit(args, {"result": str(x)}, str(x))
        return EXIT_OK
    if cmd == "commutator":
        x = commutator(parse_element(args.x), parse_element(args.y))
        _emit(args, {"result": str(x)}, str(x))
        return EXIT_OK
    if cmd == "pl":
        w = pl.pauli_lubanski()
        names = [args.component] if args.component else list(IDX)
        comps = {n: str(w[IDX[n]]) for n in names}
        _emit(args, comps, "\n".join(f"W{n} = {v}" for n, v in comps.items()))
        return EXIT_OK
    if cmd == "casimir":
        omega = str(pl.spin_casimir())
        _emit(args, {"result": omega}, omega)
        return EXIT_OK
    if cmd == "little":
        rep = little.little_algebra_massive() if args.case == "massive" else little.little_algebra_massless()
        payload = {
            "case": rep.case,
            "generators": {k: str(v) for k, v in rep.generators.items()},
            "checks": sorted(({"id": c["id"], "status": "pass" if c["ok"] else "fail",
                               "witness": c["witness"]} for c in rep.checks), key=lambda c: c["id"]),
            "notes": rep.notes,
        }
        text = "\n".join([f"{k} = {v}" for k, v in payload["generators"].items()]
                         + [f"{c['status']:<5} {c['id']}" for c in payload["checks"]] + payload["notes"])
        _emit(args, payload, text)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if cmd == "verify":
        report = checks.run_suite(args.suite, _options(args))
        _emit(args, report.to_dict(), _report_text(report))
        return EXIT_OK if report.ok else EXIT_FAIL
    if cmd == "fuzz":
        bad = confluence_fuzz(args.seed, args.trials, args.max_len)
        payload = {"seed": args.seed, "trials": args.trials, "max_len": args.max_len, "mismatches": bad}
        text = f"{len(bad)} mismatches in {args.trials} words (seed {args.seed}, max length {args.max_len})"
        _emit(args, payload, text)
        return EXIT_OK if not bad else EXIT_FAIL
    raise AssertionError(cmd)


def main() -> None:
    raise SystemExit(run_command())


if __name__ == "__main__":
    main()
