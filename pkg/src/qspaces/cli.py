"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .disk import DiskElement, disk_tn_member, f_q
from .lie import distinguish, invariant_exponent, parse_root_datum, parse_subgroup
from .parsing import ParseError, parse_expression
from .rep import (
    RESIDUAL_TOL,
    RANK_TOL,
    TruncatedRep,
    edge_residual,
    faithfulness_rank,
    relation_residuals,
)
from .spectrum import commutator_spectrum_search, format_n
from .suq2 import SUq2Element, alpha_degree_decompose, tn_member, validate_n

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; 2 is reserved for parse errors here
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_context(p):
    p.add_argument("--context", choices=("su", "disk"), default="su",
                   help="algebra of the expression: su (a a* g g*) or disk (y z z*)")


def _add_format(p):
    p.add_argument("--format", choices=("text", "csv"), default="text")


def _add_lie(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--type", help="built-in root datum, e.g. A3 or B2")
    src.add_argument("--cartan", help="explicit Cartan matrix, e.g. [[2,-1],[-1,2]]")
    p.add_argument("--S", default="", help="simple roots in the Levi part, e.g. 1,3")
    p.add_argument("--L", default="", help="lattice generators over S^c, e.g. (1,0);(0,2)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qspaces", description="Exact computations in C[SU_q(2)], the quantum disk and related invariants.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("normalize", help="print the normal form of an expression")
    p.add_argument("expr")
    _add_context(p)

    p = sub.add_parser("star", help="apply the involution")
    p.add_argument("expr")
    _add_context(p)

    p = sub.add_parser("mul", help="multiply expressions left to right")
    p.add_argument("exprs", nargs="+")
    _add_context(p)

    p = sub.add_parser("grade", help="split by alpha-degree (su) or z-degree (disk)")
    p.add_argument("expr")
    _add_context(p)

    p = sub.add_parser("tn-member", help="membership in the T_n-invariant subalgebra")
    p.add_argument("expr")
    p.add_argument("--n", required=True, help="positive integer or inf")
    _add_context(p)

    p = sub.add_parser("disk", help="image in the quantum disk (gamma - gamma* -> 0)")
    p.add_argument("expr")

    p = sub.add_parser("commspec", help="bounded commutator-spectrum search")
    p.add_argument("--n", required=True, help="positive integer or inf")
    p.add_argument("--degree", "-D", type=int, required=True, help="total degree bound")
    p.add_argument("--threads", type=int, default=1)
    _add_format(p)

    p = sub.add_parser("rep-check", help="numeric checks of the truncated representation")
    p.add_argument("--N", type=int, default=64, help="truncation size")
    p.add_argument("--q0", type=float, default=0.5, help="numeric value of q in (0, 1)")
    p.add_argument("--degree", "-D", type=int, default=None,
                   help="also test linear independence of disk monomials up to this degree")
    _add_format(p)

    p = sub.add_parser("invariant", help="n_i table and invariant exponent m")
    _add_lie(p)
    _add_format(p)

    p = sub.add_parser("distinguish", help="*-isomorphism verdict for two deformation parameters")
    p.add_argument("p", type=float)
    p.add_argument("q", type=float)
    _add_lie(p)
    return parser


def _parse(text, context):
    return parse_expression(text, context)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _cmd_normalize(args):
    return f"{_parse(args.expr, args.context)}\n"


def _cmd_star(args):
    return f"{_parse(args.expr, args.context).star()}\n"


def _cmd_mul(args):
    out = _parse(args.exprs[0], args.context)
    for text in args.exprs[1:]:
        out = out * _parse(text, args.context)
    return f"{out}\n"


def _cmd_grade(args):
    a = _parse(args.expr, args.context)
    if isinstance(a, SUq2Element):
        parts = alpha_degree_decompose(a)
    else:
        groups: dict[int, dict] = {}
        for m, c in a.items():
            groups.setdefault(m.K, {})[m] = c
        parts = {k: DiskElement(t) for k, t in sorted(groups.items())}
    if not parts:
        return "0\n"
    return "".join(f"degree {d}: {e}\n" for d, e in parts.items())


def _cmd_tn_member(args):
    n = validate_n(args.n)
    a = _parse(args.expr, args.context)
    if isinstance(a, SUq2Element):
        ok = tn_member(a, n)
    else:
        ok = all(disk_tn_member(m, n) for m in a.terms)
    return f"{'true' if ok else 'false'}\n"


def _cmd_disk(args):
    return f"{f_q(_parse(args.expr, 'su'))}\n"


def _cmd_commspec(args):
    if args.threads < 1:
        raise ValueError("--threads must be at least 1")
    report = commutator_spectrum_search(validate_n(args.n), args.degree, threads=args.threads)
    if args.format == "text":
        return report.to_text()
    rows = [("n", "D", "exponent", "a", "b")]
    for m, (a, b) in report.witnesses.items():
        rows.append((format_n(report.n), report.degree_bound, m, str(a), str(b)))
    return _csv(rows)


def _cmd_rep_check(args):
    rep = TruncatedRep(args.N, args.q0)
    rows = []
    for name, value in relation_residuals(rep, per_relation=True).items():
        rows.append((name, value, value < RESIDUAL_TOL))
    edge = edge_residual(rep)
    # the truncation defect in the last row is known in closed form
    rows.append(("edge a a* + q^2 g* g - 1", edge, abs(edge - (1 - args.q0 ** (2 * args.N))) < RESIDUAL_TOL))
    if args.degree is not None:
        ok = faithfulness_rank(args.degree, rep, RANK_TOL)
        rows.append((f"disk basis independent D={args.degree}", float(ok), ok))
    if args.format == "csv":
        return _csv([("check", "N", "q0", "value", "pass")]
                    + [(c, args.N, args.q0, f"{v:.6e}", "true" if ok else "false") for c, v, ok in rows])
    width = max(len(r[0]) for r in rows)
    lines = [f"{'relation':<{width}}  {'N':>5}  {'q0':>6}  residual"]
    for name, value, ok in rows:
        lines.append(f"{name:<{width}}  {args.N:>5}  {args.q0:>6g}  {value:.3e}  {'ok' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _lie_inputs(args):
    datum = parse_root_datum(f"type={args.type}" if args.type else f"cartan={args.cartan}")
    return datum, parse_subgroup(args.S, args.L)


def _cmd_invariant(args):
    datum, subgroup = _lie_inputs(args)
    inv = invariant_exponent(subgroup, datum)
    if args.format == "csv":
        rows = [("i", "d_i", "n_i", "d_i*c_i")]
        rows += [(i, datum.d[i - 1], format_n(ni), inv.contributions[i]) for i, ni in inv.n.items()]
        return _csv(rows) + f"m,{inv.m}\n"
    lines = [f"type={datum.label} d={','.join(map(str, datum.d))}"]
    for i, ni in inv.n.items():
        shown = "∞" if ni == float("inf") else ni
        lines.append(f"n_{i}={shown} d_{i}*c_{i}={inv.contributions[i]}")
    lines.append(f"m={inv.m}")
    return "\n".join(lines) + "\n"


def _cmd_distinguish(args):
    datum, subgroup = _lie_inputs(args)
    return f"{distinguish(args.p, args.q, subgroup, datum)}\n"


_COMMANDS = {
    "normalize": _cmd_normalize,
    "star": _cmd_star,
    "mul": _cmd_mul,
    "grade": _cmd_grade,
    "tn-member": _cmd_tn_member,
    "disk": _cmd_disk,
    "commspec": _cmd_commspec,
    "rep-check": _cmd_rep_check,
    "invariant": _cmd_invariant,
    "distinguish": _cmd_distinguish,
}


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        text = _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
