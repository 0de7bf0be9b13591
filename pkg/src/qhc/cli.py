"""Command-line interface: evaluators plus the identity verification sweep."""

from __future__ import annotations

import argparse
import json
import sys

from .exactnum import Rat, scalar_format, scalar_parse
from .highest import REPRESENTATIONS, hc
from .izergin import Kernel, izergin, izergin_left, izergin_right
from .params import Config
from .scalar import (
    RationalFunctionSpec,
    format_monomial,
    scalar_product_numeric,
    scalar_product_symbolic,
)
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser"]


def _parse_set(text):
    """Comma-separated rational literals; empty string is the empty set."""
    if text is None or text.strip() == "":
        return ()
    return tuple(scalar_parse(tok) for tok in text.split(","))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhc",
        description=(
            "Exact evaluation of Izergin determinants, trigonometric highest "
            "coefficients, and their identity suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_iz = sub.add_parser("izergin", help="evaluate an Izergin determinant")
    p_iz.add_argument("--variant", choices=("plain", "left", "right"),
                      default="plain")
    p_iz.add_argument("--x", default="", help="comma-separated rationals")
    p_iz.add_argument("--y", default="", help="comma-separated rationals")
    p_iz.add_argument("--q", required=True)

    p_hc = sub.add_parser("hc", help="evaluate a highest coefficient")
    p_hc.add_argument("--side", choices=("l", "r"), required=True)
    p_hc.add_argument("--rep", choices=REPRESENTATIONS + ("all",),
                      default="ws")
    p_hc.add_argument("--t", default="")
    p_hc.add_argument("--x", default="")
    p_hc.add_argument("--s", default="")
    p_hc.add_argument("--y", default="")
    p_hc.add_argument("--q", required=True)

    p_sp = sub.add_parser("scalar-product", help="evaluate the scalar product")
    p_sp.add_argument("--uc", default="")
    p_sp.add_argument("--vc", default="")
    p_sp.add_argument("--ub", default="")
    p_sp.add_argument("--vb", default="")
    p_sp.add_argument("--q", required=True)
    p_sp.add_argument("--r1", default=None,
                      help='rational function, e.g. "num:1,2;den:1,0,1"')
    p_sp.add_argument("--r3", default=None)
    p_sp.add_argument("--symbolic", action="store_true",
                      help="print the full monomial expansion")

    p_v = sub.add_parser("verify", help="run an identity suite")
    p_v.add_argument("--suite", choices=SUITES, required=True)
    p_v.add_argument("--a-max", type=int, default=2)
    p_v.add_argument("--b-max", type=int, default=2)
    p_v.add_argument("--trials", type=int, default=5)
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--q", default=None,
                     help="fix q instead of sampling it per case")
    p_v.add_argument("--out", default=None, help="write the JSON report here")
    return parser


def _cmd_izergin(args):
    kern = Kernel(scalar_parse(args.q))
    xs, ys = _parse_set(args.x), _parse_set(args.y)
    func = {"plain": izergin, "left": izergin_left, "right": izergin_right}
    print(scalar_format(func[args.variant](kern, xs, ys)))
    return 0


def _cmd_hc(args):
    kern = Kernel(scalar_parse(args.q))
    ts, xs = _parse_set(args.t), _parse_set(args.x)
    ss, ys = _parse_set(args.s), _parse_set(args.y)
    if args.rep == "all":
        vals = [hc(kern, args.side, ts, xs, ss, ys, rep)
                for rep in REPRESENTATIONS]
        for rep, v in zip(REPRESENTATIONS, vals):
            print(f"{rep}: {scalar_format(v)}")
        agree = all(v == vals[0] for v in vals)
        print(f"agree: {agree}")
        return 0 if agree else 1
    print(scalar_format(hc(kern, args.side, ts, xs, ss, ys, args.rep)))
    return 0


def _cmd_scalar_product(args):
    kern = Kernel(scalar_parse(args.q))
    uC, vC = _parse_set(args.uc), _parse_set(args.vc)
    uB, vB = _parse_set(args.ub), _parse_set(args.vb)
    if args.symbolic:
        poly = scalar_product_symbolic(kern, uC, vC, uB, vB)
        for mono in sorted(poly, key=lambda m: (len(m), sorted(m))):
            print(f"{format_monomial(mono)}: {scalar_format(poly[mono])}")
        return 0
    r1 = RationalFunctionSpec.parse(args.r1) if args.r1 else lambda u: Rat(1)
    r3 = RationalFunctionSpec.parse(args.r3) if args.r3 else lambda u: Rat(1)
    print(scalar_format(scalar_product_numeric(kern, uC, vC, uB, vB, r1, r3)))
    return 0


def _cmd_verify(args):
    cfg = Config(q=None if args.q is None else scalar_parse(args.q),
                 seed=args.seed)
    report = run_suite(args.suite, a_max=args.a_max, b_max=args.b_max,
                       trials=args.trials, seed=args.seed, cfg=cfg)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    summary = report["summary"]
    print(f"suite={report['suite']} pass={summary['pass']} "
          f"fail={summary['fail']} error={summary['error']}")
    if not args.out:
        print(text)
    return 0 if summary["fail"] == 0 and summary["error"] == 0 else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "izergin": _cmd_izergin,
        "hc": _cmd_hc,
        "scalar-product": _cmd_scalar_product,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
