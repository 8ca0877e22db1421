"""Command-line front end.

Exit codes: 0 ok, 1 selftest failure, 2 domain error, 3 hypothesis
violation, 4 I/O or parse error. With ``--json`` stdout carries exactly one
JSON document; diagnostics always go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import banding, obstruction
from .casson_walker import Normalization, SurgeryOnKnot, lambda_knot_surgery, lambda_orientation_reverse
from .dedekind import dedekind_sum_direct, dedekind_sum_fast, six_p_s
from .errors import SurgeryError
from .numerics import format_rational
from .selftest import faulty_dedekind_sum, run_selftest

EXIT_SELFTEST = 1
EXIT_IO = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> tuple[int, int]:
    """Inclusive "a:b"."""
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range 'a:b', got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def cmd_dedekind(args) -> tuple[dict, str]:
    q, p = args.q, args.p
    if args.method == "direct":
        s = dedekind_sum_direct(q, p)
    elif args.method == "fast":
        s = dedekind_sum_fast(q, p)
    else:
        s = dedekind_sum_fast(q, p)
        d = dedekind_sum_direct(q, p)
        if d != s:
            raise ArithmeticError(f"direct {d} != fast {s}")
        return ({"s": format_rational(s), "direct": format_rational(d), "fast": format_rational(s)},
                f"s({q}, {p}) = {format_rational(s)}  (direct and fast agree)")
    return {"s": format_rational(s)}, f"s({q}, {p}) = {format_rational(s)}"


def cmd_lambda(args) -> tuple[dict, str]:
    n = Normalization.parse(args.normalization)
    lam = lambda_knot_surgery(SurgeryOnKnot(args.a2, args.p, args.q), n)
    rev = lambda_orientation_reverse(lam)
    payload = {"lambda": format_rational(lam), "lambda_reversed": format_rational(rev),
               "normalization": n.value}
    text = (f"lambda(S^3_{{{args.p}/{args.q}}}(K), a2={args.a2}) = {format_rational(lam)}"
            f"  [{n.value}]\nlambda of the orientation reversal = {format_rational(rev)}")
    return payload, text


def cmd_erratum(args) -> tuple[dict, str]:
    s = obstruction.SurgeryScenario(args.p, args.q, args.m, args.ell)
    err = obstruction.derive_congruence(s, obstruction.ERRONEOUS)
    cor = obstruction.derive_congruence(s, obstruction.CORRECTED)
    six_ps = six_p_s(s.q, s.p)
    payload = {
        "p": s.p, "q": s.q, "m": s.m, "ell": s.ell,
        "epsilon": s.epsilon, "ell0": s.ell0, "six_ps": six_ps,
        "erroneous": err.classification.value,
        "corrected": cor.classification.value,
        "residues": {
            err.normalization.value: {"lhs": err.lhs_residue.value, "rhs": err.rhs_residue.value},
            cor.normalization.value: {"lhs": cor.lhs_residue.value, "rhs": cor.rhs_residue.value},
        },
        "constraint": obstruction.CONSTRAINT,
        "constraint_check": obstruction.constraint_check(s),
    }
    text = "\n".join([
        f"scenario p={s.p} q={s.q} m={s.m} ell={s.ell}: eps={s.epsilon:+d}, ell0={s.ell0}, "
        f"6ps(q,p)={six_ps}",
        f"  walker_p1 (erroneous): {err.lhs_residue} ≡ {err.rhs_residue} (mod 3)? "
        f"{err.holds} -> {err.classification.value}",
        f"  paper_p2 (corrected):  {cor.lhs_residue} ≡ {cor.rhs_residue} (mod 3)? "
        f"{cor.holds} -> {cor.classification.value}",
        f"  {obstruction.CONSTRAINT}: {payload['constraint_check']}",
    ])
    return payload, text


def cmd_enumerate(args) -> tuple[dict, str]:
    n = Normalization.parse(args.normalization)
    rows = obstruction.enumerate_candidates(args.p, args.q, args.m_range, args.ell_range, n)
    payload = obstruction.scenario_report(args.p, args.q, n, rows)
    lines = [f"p={args.p} q={args.q} [{n.value}] {len(rows)} admissible scenarios",
             f"{'m':>5} {'ell':>5} {'eps':>4} {'ell0':>5}  verdict"]
    lines += [f"{r.m:>5} {r.ell:>5} {r.epsilon:>+4d} {r.ell0:>5}  {r.verdict.value}" for r in rows]
    return payload, "\n".join(lines)


def cmd_theorem2(args) -> tuple[dict, str]:
    rep = obstruction.theorem2_status(args.p, args.q, args.bound)
    text = "\n".join([
        f"claim: {rep['claim']}",
        f"erroneous derivation contradicts every scenario: {rep['erroneous_universal_contradiction']}",
        f"corrected derivation leaves {len(rep['allowed'])} ALLOWED scenario(s) "
        f"with |m|, ell <= {args.bound}",
        *(f"  m={a['m']} ell={a['ell']} eps={a['epsilon']:+d} ell0={a['ell0']}"
          for a in rep["allowed"]),
        f"surviving constraint: {rep['constraint_instance']}",
    ])
    return rep, text


def cmd_banding(args) -> tuple[dict, str]:
    if args.table is not None:
        rows = banding.torus_banding_table(args.table)
        payload = {"convention": banding.SIGNATURE_CONVENTION,
                   "rows": [{"k": k, **v.to_json()} for k, v in rows]}
        return payload, banding.format_table(rows)
    if args.torus is not None:
        knot = banding.torus_2k_invariants(args.torus)
    else:
        try:
            knot = banding.KnotDescriptor.load(args.knot)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed knot descriptor {args.knot}: {exc}") from exc
    verdict = banding.corollary_verdict(knot)
    payload = {"knot": knot.to_json(), **verdict.to_json()}
    text = "\n".join([
        f"{knot.name}: det={knot.determinant} signature={knot.signature} a2={knot.a2}",
        f"  pre-erratum:  {verdict.pre_erratum.value}",
        f"  post-erratum: {verdict.post_erratum.value}",
        *([f"  constraint:   {verdict.surviving_constraint}"] if verdict.surviving_constraint else []),
        *(f"  note: {n}" for n in verdict.notes),
    ])
    return payload, text


def cmd_selftest(args) -> tuple[dict, str]:
    fast = faulty_dedekind_sum if args.inject_fault else dedekind_sum_fast
    rep = run_selftest(args.level, fast=fast, log=lambda s: print(s, file=sys.stderr))
    return rep, f"selftest {args.level}: {rep['passed']} passed, {rep['failed']} failed"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surgery-obstruction",
                     description="Dedekind sums, Casson-Walker surgery formulas and the "
                                 "mod-3 obstruction to orientation-reversing distance-one surgery.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q, p)")
    p.add_argument("q", type=int, help="numerator argument")
    p.add_argument("p", type=int, help="modulus (sum runs over k = 1..p-1)")
    p.add_argument("--method", choices=("direct", "fast", "both"), default="fast")
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("lambda", parents=[common], help="Casson-Walker invariant of p/q surgery")
    p.add_argument("a2", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--normalization", default="paper",
                   choices=("walker", "paper", "walker_p1", "paper_p2"))
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("erratum", parents=[common],
                       help="mod-3 verdicts for one scenario under both normalizations")
    for name in ("p", "q", "m", "ell"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_erratum)

    p = sub.add_parser("enumerate", parents=[common], help="admissible (m, ell) with verdicts")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--m-range", type=parse_range, required=True, metavar="A:B")
    p.add_argument("--ell-range", type=parse_range, required=True, metavar="A:B")
    p.add_argument("--normalization", default="paper",
                   choices=("walker", "paper", "walker_p1", "paper_p2"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("theorem2", parents=[common],
                       help="status of the non-existence claim for (p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("banding", parents=[common], help="chirally cosmetic banding verdict")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--torus", type=int, metavar="K", help="the torus knot T(2, K)")
    g.add_argument("--knot", metavar="FILE", help="knot descriptor JSON file")
    g.add_argument("--table", type=int, metavar="K_MAX", help="table for odd k in [3, K_MAX]")
    p.add_argument("--jsonl", action="store_true", help="with --table: one JSON object per row")
    p.set_defaults(func=cmd_banding)

    p = sub.add_parser("selftest", parents=[common], help="run the property sweeps")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def _emit_error(as_json: bool, kind: str, message: str, code: int) -> int:
    print(f"error [{kind}]: {message}", file=sys.stderr)
    if as_json:
        print(json.dumps({"status": "error", "error_kind": kind, "message": message}))
    return code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        payload, text = args.func(args)
    except UsageError as exc:
        return _emit_error(as_json, "UsageError", str(exc), EXIT_IO)
    except OSError as exc:
        return _emit_error(as_json, type(exc).__name__, str(exc), EXIT_IO)
    except json.JSONDecodeError as exc:
        return _emit_error(as_json, "JSONDecodeError", str(exc), EXIT_IO)
    except SurgeryError as exc:
        return _emit_error(as_json, exc.kind, str(exc), exc.exit_code)

    if getattr(args, "jsonl", False) and "rows" in payload:
        for row in payload["rows"]:
            print(json.dumps(row, ensure_ascii=False))
    elif args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)
    if args.command == "selftest" and payload["failed"]:
        return EXIT_SELFTEST
    return 0


if __name__ == "__main__":
    sys.exit(main())
