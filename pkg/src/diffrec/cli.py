"""
Command-line front end.

    diffrec solve --field qz -P "Y^2 - Y*(1/(z-1)) + 1/(z-1)^2" --inits 1,0 --terms 6
    diffrec recur --field qz --target "1/z" --bound 3 --window 12
    diffrec check hopf-axioms
"""

import argparse
import json
import sys

from . import drs, hopf
from .corpus import regression_corpus
from .errors import DiffRecError
from .field import element_text, field_by_name
from .hurwitz import Seq, source, target
from .ore import ore_text
from .parse import parse_field_expr, parse_inits, parse_ore_expr

CHECK_SUITES = ("hopf-axioms",)


# --------------------------------------------------------------------------
# output


def table(headers, columns):
    """Aligned text table; ``columns`` are lists of already-rendered strings."""
    rows = [headers] + [list(r) for r in zip(*columns)]
    widths = [max(len(r[j]) for r in rows) for j in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def seq_table(named):
    """Table with an index column followed by one column per (name, Seq)."""
    n = max((len(s) for _, s in named), default=0)
    cols = [[str(i) for i in range(n)]]
    for _, s in named:
        cols.append([element_text(x) for x in s.terms] + [""] * (n - len(s)))
    return table(["n"] + [name for name, _ in named], cols)


def emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


# --------------------------------------------------------------------------
# input helpers


def _field(args):
    return field_by_name(args.field)


def _drs(args, p_attr="P", inits_attr="inits"):
    field = _field(args)
    p_text = getattr(args, p_attr)
    inits_text = getattr(args, inits_attr)
    if p_text is None or inits_text is None:
        flag = "-P" if p_attr == "P" else "--" + p_attr
        raise argparse.ArgumentTypeError(f"{flag} and --{inits_attr} are required")
    return drs.DRSeq(parse_ore_expr(p_text, field), parse_inits(inits_text, field))


def _input_seq(args, length):
    """The sequence named by --seq, --target, --source or -P/--inits."""
    field = _field(args)
    if getattr(args, "seq", None) is not None:
        return Seq(field, parse_inits(args.seq, field)), False
    if getattr(args, "target", None) is not None:
        return target(parse_field_expr(args.target, field), length, field), False
    if getattr(args, "source", None) is not None:
        return source(parse_field_expr(args.source, field), length, field), False
    if getattr(args, "P", None) is not None:
        return drs.materialize(_drs(args), length), True
    raise argparse.ArgumentTypeError("give one of --seq, --target, --source or -P/--inits")


# --------------------------------------------------------------------------
# commands


def cmd_expand(args):
    field = _field(args)
    if (args.target is None) == (args.source is None):
        raise argparse.ArgumentTypeError("give exactly one of --target or --source")
    which = "target" if args.target is not None else "source"
    x = parse_field_expr(args.target if which == "target" else args.source, field)
    s = target(x, args.terms, field) if which == "target" else source(x, args.terms, field)
    r = drs.embed_as_drs(x, which, field)
    emit(args, {"sequence": s.to_json(), "drs": r.to_json()},
         f"{which}({element_text(x)}), annihilator {ore_text(r.annihilator)}\n"
         + seq_table([(which, s)]))


def cmd_solve(args):
    r = _drs(args)
    a = drs.materialize(r, args.terms)
    emit(args, {"drs": r.to_json(), "sequence": a.to_json()},
         f"annihilator {ore_text(r.annihilator)}\n" + seq_table([("a", a)]))


def cmd_fund(args):
    field = _field(args)
    p = parse_ore_expr(args.P, field)
    fm = drs.fundamental_matrix(p, args.terms)
    named = [(f"o_{i}", o) for i, o in enumerate(fm)]
    emit(args, {"annihilator": ore_text(p), "solutions": [o.to_json() for o in fm]},
         f"annihilator {ore_text(p)}\n" + seq_table(named))


def cmd_annihilate(args):
    bound = args.bound
    if bound is None:
        if args.P is None:
            raise argparse.ArgumentTypeError("--bound is required unless -P/--inits is given")
        bound = parse_ore_expr(args.P, _field(args)).degree
    window = args.window if args.window is not None else 2 * bound + 4
    a, known = _input_seq(args, max(2 * bound, window, args.terms))
    p = drs.min_annihilator(a, bound, window)
    caveat = None if known else drs.CERTIFIED_CAVEAT.format(bound=bound)
    data = {"annihilator": ore_text(p) if p is not None else None, "bound": bound,
            "window": window, "caveat": caveat}
    text = ore_text(p) if p is not None else "none"
    if caveat:
        text += f"\n({caveat})"
    emit(args, data, text)


def _binary(args, op, default_bound):
    x = _drs(args, "P1", "inits1")
    y = _drs(args, "P2", "inits2")
    bound = args.bound if args.bound is not None else default_bound(x, y)
    n = max(args.terms, 2 * bound, args.window or 2 * bound + 4)
    combined = op(drs.materialize(x, n), drs.materialize(y, n))
    window = args.window or 2 * bound + 4
    p = drs.min_annihilator(combined, bound, window)
    if p is None:
        emit(args, {"drs": None, "bound": bound}, "none")
        return
    r = drs.DRSeq(p, combined.terms[:p.degree])
    s = combined.truncate(args.terms)
    emit(args, {"drs": r.to_json(), "bound": bound, "sequence": s.to_json()},
         f"annihilator {ore_text(p)}\n" + seq_table([("a", s)]))


def cmd_product(args):
    _binary(args, lambda a, b: a * b, lambda x, y: x.order * y.order)


def cmd_sum(args):
    _binary(args, lambda a, b: a + b, lambda x, y: x.order + y.order)


def cmd_antipode(args):
    a, _ = _input_seq(args, args.terms)
    s = hopf.antipode(a)
    emit(args, {"input": a.to_json(), "antipode": s.to_json()},
         seq_table([("a", a), ("S(a)", s)]))


def cmd_comult(args):
    r = _drs(args)
    legs = hopf.comult(r, args.terms)
    named = []
    for i, (left, right) in enumerate(legs.pairs):
        named += [(f"N^{i}(a)", left), (f"o_{i}", right)]
    emit(args, {"drs": r.to_json(), "comult": legs.to_json()},
         f"Delta(a) = sum_i N^i(a) (x) o_i, annihilator {ore_text(r.annihilator)}\n"
         + seq_table(named))


def cmd_recur(args):
    if args.bound is None or args.window is None:
        raise argparse.ArgumentTypeError("--bound and --window are required")
    a, _ = _input_seq(args, args.window + args.bound)
    v = drs.find_linear_recurrence(a, args.bound, args.window)
    if v is None:
        emit(args, {"recurrence": None, "bound": args.bound, "window": args.window}, "none")
        return
    coeffs = [element_text(x) for x in v]
    emit(args, {"recurrence": coeffs, "bound": args.bound, "window": args.window},
         " + ".join(f"({c})*a(n+{j})" for j, c in enumerate(coeffs)) + " = 0")


def cmd_check(args):
    reports = hopf.run_hopf_suite(regression_corpus(), length=args.terms)
    ok = all(r.passed for r in reports)
    emit(args, {"suite": args.suite, "status": "pass" if ok else "fail",
                "reports": [r.to_json() for r in reports]},
         "\n".join(r.line() for r in reports))
    return 0 if ok else 1


# --------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=["q", "qz"], default="qz")
    common.add_argument("--terms", type=int, default=10)
    common.add_argument("--json", action="store_true")

    ap = argparse.ArgumentParser(prog="diffrec", description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, *flags):
        p = sub.add_parser(name, parents=[common], help=help)
        for f in flags:
            f(p)
        p.set_defaults(func=func)
        return p

    def gen(p):
        p.add_argument("-P", help="monic annihilator, e.g. 'Y^2 - Y*z + 1'")
        p.add_argument("--inits", help="initial values, comma separated")

    def anyseq(p):
        gen(p)
        p.add_argument("--seq", help="explicit prefix, comma separated")
        p.add_argument("--target", help="use t(x)")
        p.add_argument("--source", help="use s(x)")

    def search(p):
        p.add_argument("--bound", type=int)
        p.add_argument("--window", type=int)

    def pair(p):
        for k in ("1", "2"):
            p.add_argument(f"--P{k}", required=True)
            p.add_argument(f"--inits{k}", required=True)
        search(p)

    def embed(p):
        p.add_argument("--target")
        p.add_argument("--source")

    add("expand", cmd_expand, "Hurwitz expansion t(x) or s(x)", embed)
    add("solve", cmd_solve, "materialize a solution of P", gen)
    add("fund", cmd_fund, "fundamental matrix of solutions", gen)
    add("annihilate", cmd_annihilate, "least monic annihilator", anyseq, search)
    add("product", cmd_product, "annihilator of a product", pair)
    add("sum", cmd_sum, "annihilator of a sum", pair)
    add("antipode", cmd_antipode, "antipode S(a)", anyseq)
    add("comult", cmd_comult, "comultiplication legs", gen)
    add("recur", cmd_recur, "constant-coefficient recurrence search", anyseq, search)
    p = add("check", cmd_check, "run a verification suite")
    p.add_argument("suite", choices=CHECK_SUITES)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        status = args.func(args)
    except argparse.ArgumentTypeError as e:
        ap.error(str(e))
    except DiffRecError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ZeroDivisionError as e:
        print(f"error: DivisionByZero: {e}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
