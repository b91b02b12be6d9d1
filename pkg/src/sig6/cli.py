"""Command-line front end.

Subcommands: k-table, eval, verify-identity, verify-bbg, roots, self-test.
Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import checks, core, identities, weierstrass
from .errors import DomainError, Sig6Error
from .grids import linspace, parse_grid
from .modulus import KK_MAX, KK_MIN, Modulus

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# options whose values may legitimately start with '-' (e.g. -K:K:3)
_GRID_FLAGS = ("--u-range", "--x-grid", "--p-grid", "--kk-grid")


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        # shortest repr that round-trips to the same double
        return repr(value)
    return str(value)


def render(rows: list[dict], fmt: str, config: dict, max_residual: float, passed: bool) -> str:
    if fmt == "json":
        doc = {"config": config, "rows": rows, "max_residual": max_residual, "pass": passed}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([_fmt(v) for v in row.values()])
    return buf.getvalue()


def _modulus(kk: float) -> Modulus:
    if not KK_MIN <= kk <= KK_MAX:
        raise UsageError(f"modulus {kk!r} outside the admissible range [{KK_MIN}, {KK_MAX}]")
    return Modulus(kk)


def _kk_values(args) -> list[float]:
    if args.kk is not None and args.kk_grid is not None:
        raise UsageError("give either --kk or --kk-grid, not both")
    if args.kk is not None:
        values = [args.kk]
    else:
        values = linspace(*_grid(args.kk_grid or "0.1:0.9:9"))
    for kk in values:
        _modulus(kk)
    return values


def _grid(text: str, K: float | None = None) -> tuple[float, float, int]:
    try:
        return parse_grid(text, K)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_k_table(args):
    rows = []
    worst = 0.0
    for kk in _kk_values(args):
        values = checks.k_routes(_modulus(kk))
        diff = checks.max_pairwise_relative(values)
        worst = max(worst, diff)
        rows.append({
            "kk": kk,
            "K_series": values["series"],
            "K_quad": values["quadrature"],
            "K_psi": values["psi"],
            "K_cubic": values["cubic"],
            "K_agm": values["agm"],
            "max_pairwise_relative_diff": diff,
        })
    failing = [r for r in rows if r["max_pairwise_relative_diff"] > args.tol]
    offender = None
    if failing:
        r = max(failing, key=lambda r: r["max_pairwise_relative_diff"])
        offender = f"kk={r['kk']!r}: max pairwise relative difference {r['max_pairwise_relative_diff']:.3e}"
    return rows, worst, offender


def cmd_eval(args):
    if args.kk is None:
        raise UsageError("eval needs --kk")
    ctx = core.Sig6Context.create(_modulus(args.kk))
    rows = []
    worst = 0.0
    for u in linspace(*_grid(args.u_range, ctx.K)):
        T = core.phi(ctx, u)
        s, c = core.s6(ctx, u), core.c6(ctx, u)
        residual = s * s + c * c - 1.0
        worst = max(worst, abs(residual))
        rows.append({"u": u, "phi": T, "s6": s, "c6": c, "pythagorean_residual": residual})
    offender = None
    if worst > args.tol:
        r = max(rows, key=lambda r: abs(r["pythagorean_residual"]))
        offender = f"u={r['u']!r}: s6^2 + c6^2 - 1 = {r['pythagorean_residual']:.3e}"
    return rows, worst, offender


def _identity_rows(report, params=None):
    rows = []
    for i, pt in enumerate(report.points):
        row = {} if params is None else {"p": params[i]}
        row.update({"x": pt.x, "xi": pt.xi, "lhs": pt.lhs, "rhs": pt.rhs, "residual": pt.residual})
        rows.append(row)
    return rows


def _identity_offender(report, tol):
    pt = report.worst()
    if pt is None or pt.residual <= tol:
        return None
    return f"x={pt.x!r} xi={pt.xi!r}: residual {pt.residual:.3e}"


def cmd_verify_identity(args):
    grid = linspace(*_grid(args.x_grid))
    if not all(0.0 < x < 1.0 for x in grid):
        raise UsageError("x grid must lie inside (0, 1)")
    report = identities.verify_sextic_identity(grid, threshold=args.tol)
    return _identity_rows(report), report.max_relative_residual, _identity_offender(report, args.tol)


def cmd_verify_bbg(args):
    grid = linspace(*_grid(args.p_grid))
    if not all(0.0 < p < 1.0 for p in grid):
        raise UsageError("p grid must lie inside (0, 1)")
    report = identities.verify_bbg(grid, args.which, threshold=args.tol)
    rows = _identity_rows(report, grid)
    return rows, report.max_relative_residual, _identity_offender(report, args.tol)


def cmd_roots(args):
    rows = []
    worst = 0.0
    offender = None
    for kk in _kk_values(args):
        d = weierstrass.build(_modulus(kk))
        root_sum = d.e1 + d.e2 + d.e3
        midpoint = weierstrass.midpoint_relation_check(d)
        rows.append({
            "kk": kk, "g2": d.g2, "g3": d.g3, "delta": d.delta,
            "e1": d.e1, "e2": d.e2, "e3": d.e3, "omega": d.omega,
            "root_sum": root_sum, "midpoint_residual": midpoint,
        })
        worst = max(worst, abs(root_sum), midpoint)
        if offender is None and (abs(root_sum) > 1e-14 or midpoint > args.tol):
            offender = f"kk={kk!r}: root sum {root_sum:.3e}, midpoint residual {midpoint:.3e}"
    return rows, worst, offender


def cmd_self_test(args):
    rows = []
    offender = None
    for crit in checks.run_all():
        print(crit.summary(), file=sys.stderr)
        w = crit.worst()
        rows.append({
            "criterion": crit.number,
            "name": crit.name,
            "checks": len(crit.measurements),
            "worst_check": w.label,
            "worst_value": w.value,
            "threshold": w.threshold,
            "pass": crit.passed,
        })
        if offender is None and not crit.passed:
            offender = f"criterion {crit.number} ({crit.name}): {w.label} = {w.value:.3e}"
    worst = 0.0 if offender is None else 1.0
    return rows, worst, offender


COMMANDS = {
    "k-table": (cmd_k_table, 1e-9),
    "eval": (cmd_eval, 1e-12),
    "verify-identity": (cmd_verify_identity, 1e-9),
    "verify-bbg": (cmd_verify_bbg, 1e-9),
    "roots": (cmd_roots, 1e-12),
    "self-test": (cmd_self_test, None),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", metavar="PATH", help="write here instead of standard output")
    common.add_argument("--tol", type=float, help="pass/fail threshold")

    parser = argparse.ArgumentParser(
        prog="sig6", description="Signature-six elliptic toolkit: tables and identity checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("k-table", parents=[common], help="K by five routes, per modulus")
    p.add_argument("--kk", type=float)
    p.add_argument("--kk-grid", metavar="START:STOP:COUNT")

    p = sub.add_parser("eval", parents=[common], help="phi, s6, c6 over a u grid")
    p.add_argument("--kk", type=float)
    p.add_argument("--u-range", default="0:4K:65", metavar="START:STOP:COUNT",
                   help="endpoints may be multiples of K, e.g. -K:4K:65")

    p = sub.add_parser("verify-identity", parents=[common], help="check the sextic identity on an x grid")
    p.add_argument("--x-grid", default="0.02:0.9:45", metavar="START:STOP:COUNT")

    p = sub.add_parser("verify-bbg", parents=[common], help="check the BBG parametrizations on a p grid")
    p.add_argument("--p-grid", default="0.05:0.95:19", metavar="START:STOP:COUNT")
    p.add_argument("--which", choices=("theorem", "corollary"), default="theorem")

    p = sub.add_parser("roots", parents=[common], help="Weierstrass invariants, roots and half-period")
    p.add_argument("--kk", type=float)
    p.add_argument("--kk-grid", metavar="START:STOP:COUNT")

    sub.add_parser("self-test", parents=[common], help="run every verification suite")
    return parser


def _join_grid_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _GRID_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _config(args) -> dict:
    skip = {"output", "format"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_join_grid_values(list(argv)))
    handler, default_tol = COMMANDS[args.command]
    if args.tol is None:
        args.tol = default_tol
    elif not (math.isfinite(args.tol) and args.tol > 0):
        print("sig6: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows, worst, offender = handler(args)
    except (UsageError, DomainError) as exc:
        print(f"sig6 {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Sig6Error as exc:
        print(f"sig6 {args.command}: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL

    passed = offender is None
    text = render(rows, args.format, _config(args), worst, passed)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not passed:
        print(f"sig6 {args.command}: verification failed, worst offender {offender}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
