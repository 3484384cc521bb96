"""Command-line front end.

Exit codes: 0 success or all reports pass, 1 some report failed (the report is
still printed), 2 usage or domain error.

Negative values may be passed either as ``--x=-1,2`` or ``--x -1,2``.
"""

import argparse
import json
import sys

from . import __version__
from .exact import DomainError, bernoulli, format_rational, parse_point, parse_rational
from .identities import CnrTable, cnr_closed, cnr_recursive, cnr_term_count, verify_relation26
from .partfunc import (
    check_parity,
    compute_f_poly,
    count_partitions_brute,
    eval_f,
    eval_W1,
    proximity_report,
)
from .pcore import eval_P, eval_P_recursive
from .trec import InterpolationError, compute_T_poly, eval_T_direct, eval_T_via_P
from .verify import (
    verify_bounds,
    verify_conjecture1,
    verify_conjecture2,
    verify_eq28_equivalence,
    verify_eq28_suite,
    verify_lemmas,
    verify_parity_suite,
    verify_power_sum_relations,
)

VALUE_FLAGS = ("--x", "--d", "--s", "--s-values")
SUITES = ("conjecture1", "conjecture2", "bounds", "relations", "lemmas", "parity", "eq28",
          "relation26", "proximity")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _glue_negative_values(argv):
    # argparse would read "-1,2" as an option; rewrite to "--x=-1,2"
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _pos(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _rational(text):
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _point(text):
    try:
        return parse_point(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=42)

    p = Parser(prog="sympart", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    c = sub.add_parser("bernoulli", parents=[common], help="k-th Bernoulli number (B_1 = -1/2)")
    c.add_argument("--k", type=_nonneg, required=True)

    for name in ("eval-p", "eval-p-rec"):
        c = sub.add_parser(name, parents=[common], help="P_n at a point")
        c.add_argument("--n", type=_pos, required=True)
        c.add_argument("--x", type=_point, required=True)
        if name == "eval-p":
            c.add_argument("--max-vars", type=_pos, default=22)

    c = sub.add_parser("eval-t", parents=[common], help="T_r at a point")
    c.add_argument("--r", type=_nonneg, required=True)
    c.add_argument("--x", type=_point, required=True)
    how = c.add_mutually_exclusive_group()
    how.add_argument("--direct", dest="via_p", action="store_false", default=False)
    how.add_argument("--via-p", dest="via_p", action="store_true")

    for name, what in (("t-poly", "T_r"), ("f-poly", "f_r")):
        c = sub.add_parser(name, parents=[common], help=f"{what} in power sums")
        c.add_argument("--r", type=_nonneg, required=True)

    c = sub.add_parser("f-eval", parents=[common], help="f_r at a generator tuple")
    c.add_argument("--r", type=_nonneg, required=True)
    c.add_argument("--d", type=_point, required=True)

    c = sub.add_parser("w1", parents=[common], help="polynomial part W_1(s, d)")
    c.add_argument("--s", type=_rational, required=True)
    c.add_argument("--d", type=_point, required=True)

    c = sub.add_parser("w-count", parents=[common], help="denumerant W(s, d) by counting")
    c.add_argument("--s", type=_nonneg, required=True)
    c.add_argument("--d", type=_point, required=True)

    c = sub.add_parser("cnr", parents=[common], help="C_{n,r}; omit --r for the table up to n")
    c.add_argument("--n", type=_pos, required=True)
    c.add_argument("--r", type=_pos)
    c.add_argument("--closed", action="store_true", help="use the printed closed form (r <= 4)")

    c = sub.add_parser("verify", parents=[common], help="run a verification suite")
    c.add_argument("suite", choices=SUITES)
    c.add_argument("--max-r", type=_pos)
    c.add_argument("--m", type=_pos)
    c.add_argument("--n", type=_pos)
    c.add_argument("--max-n", type=_pos)
    c.add_argument("--max-m", type=_pos)
    c.add_argument("--trials", type=_pos)
    c.add_argument("--d", type=_point)
    c.add_argument("--s-values", type=_point, help="comma-separated s values for parity")
    c.add_argument("--tuples", type=_pos, default=20)
    c.add_argument("--s-count", type=_pos, default=20)
    c.add_argument("--family", choices=("T", "f"), default="f")
    c.add_argument("--windows", type=_pos, default=3)
    return p


def _emit_value(value, args, out):
    if args.json:
        out.write(json.dumps({"value": format_rational(value)}) + "\n")
    else:
        out.write(format_rational(value) + "\n")


def _emit_poly(name, poly, var, args, out):
    if args.json:
        out.write(json.dumps(poly.to_dict(var), separators=(",", ":")) + "\n")
    else:
        out.write(f"{name} = {poly.common_form(var)}\n")


def _emit_report(rep, args, out):
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        out.write(rep.summary() + "\n")
        for f in rep.failures:
            out.write(f"  FAIL {json.dumps(f['inputs'])}: expected {f['expected']}, "
                      f"got {f['actual']}\n")
    return 0 if rep.passed else 1


def _opt(value, default):
    return default if value is None else value


def run_suite(args):
    s = args.suite
    if s == "conjecture1":
        return verify_conjecture1(_opt(args.max_r, 7), args.seed)
    if s == "conjecture2":
        return verify_conjecture2(_opt(args.m, 4), args.seed, _opt(args.trials, 50))
    if s == "bounds":
        return verify_bounds(_opt(args.max_r, 7), _opt(args.m, 3), args.seed,
                             _opt(args.trials, 200))
    if s == "relations":
        return verify_power_sum_relations(_opt(args.m, 2), args.seed, _opt(args.trials, 200))
    if s == "lemmas":
        return verify_lemmas(_opt(args.max_n, 10), _opt(args.max_m, 6), args.seed,
                             _opt(args.trials, 200))
    if s == "parity":
        if args.d is not None:
            s_values = args.s_values or tuple(range(-10, 11))
            return check_parity(args.d, s_values)
        return verify_parity_suite(args.tuples, _opt(args.max_m, 5), args.s_count, args.seed)
    if s == "eq28":
        if args.n is not None:
            return verify_eq28_equivalence(args.n)
        return verify_eq28_suite(_opt(args.max_n, 8))
    if s == "relation26":
        return verify_relation26(args.family, _opt(args.n, 1), _opt(args.m, 2), args.seed,
                                 _opt(args.trials, 50))
    if s == "proximity":
        if args.d is None:
            raise DomainError("proximity needs --d")
        return proximity_report(args.d, args.windows)
    raise DomainError(f"unknown suite {s}")  # pragma: no cover


def dispatch(args, out):
    cmd = args.command
    if cmd == "bernoulli":
        _emit_value(bernoulli(args.k), args, out)
    elif cmd == "eval-p":
        _emit_value(eval_P(args.n, args.x, max_vars=args.max_vars), args, out)
    elif cmd == "eval-p-rec":
        _emit_value(eval_P_recursive(args.n, args.x), args, out)
    elif cmd == "eval-t":
        fn = eval_T_via_P if args.via_p else eval_T_direct
        _emit_value(fn(args.r, args.x), args, out)
    elif cmd == "t-poly":
        _emit_poly(f"T_{args.r}", compute_T_poly(args.r, args.seed), "E", args, out)
    elif cmd == "f-poly":
        _emit_poly(f"f_{args.r}", compute_f_poly(args.r, args.seed), "s", args, out)
    elif cmd == "f-eval":
        _emit_value(eval_f(args.r, args.d), args, out)
    elif cmd == "w1":
        _emit_value(eval_W1(args.s, args.d), args, out)
    elif cmd == "w-count":
        _emit_value(count_partitions_brute(args.s, args.d), args, out)
    elif cmd == "cnr":
        if args.r is None:
            rows = CnrTable.build(args.n).rows()
            if args.json:
                out.write(json.dumps(rows) + "\n")
            else:
                for row in rows:
                    out.write(f"C[{row['n']},{row['r']}] = {row['value']}  "
                              f"({row['terms']} terms)\n")
            return 0
        value = cnr_closed(args.n, args.r) if args.closed else cnr_recursive(args.n, args.r)
        if args.json:
            row = {"n": args.n, "r": args.r, "value": str(value),
                   "terms": cnr_term_count(args.n, args.r)}
            out.write(json.dumps(row) + "\n")
        else:
            out.write(f"{value}\n")
    elif cmd == "verify":
        return _emit_report(run_suite(args), args, out)
    return 0


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        return dispatch(args, out)
    except UsageError as exc:
        err.write(f"sympart: usage error: {exc}\n")
        return 2
    except (DomainError, ZeroDivisionError, InterpolationError) as exc:
        err.write(f"sympart: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
