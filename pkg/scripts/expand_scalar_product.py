#!/usr/bin/env python3
"""Print the symbolic scalar-product expansion at a sampled generic point.

Shows every monomial in the formal vacuum-ratio symbols together with its
exact rational coefficient, and cross-checks the two extreme coefficients
against the left and right highest coefficients.

Usage:
    python scripts/expand_scalar_product.py [--a 2] [--b 2] [--seed 0]
"""

import argparse

from qhc.exactnum import scalar_format
from qhc.highest import hc
from qhc.izergin import Kernel
from qhc.params import Config, sample_generic
from qhc.scalar import extract_coefficient, format_monomial, monomial, scalar_product_symbolic


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=int, default=2)
    ap.add_argument("--b", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    (uC, uB, vC, vB), q = sample_generic(
        (args.a, args.a, args.b, args.b), Config(seed=args.seed)
    )
    kern = Kernel(q)
    print(f"q  = {scalar_format(q)}")
    for name, vals in (("uC", uC), ("uB", uB), ("vC", vC), ("vB", vB)):
        print(f"{name} = ({', '.join(scalar_format(v) for v in vals)})")
    print()

    poly = scalar_product_symbolic(kern, uC, vC, uB, vB)
    for mono in sorted(poly, key=lambda m: (len(m), sorted(m))):
        print(f"{format_monomial(mono):40s} {scalar_format(poly[mono])}")
    print(f"\n{len(poly)} monomials")

    ff = kern.fprod(vC, uC) * kern.fprod(vB, uB)
    right = monomial([("uB", i) for i in range(args.a)],
                     [("vC", j) for j in range(args.b)])
    left = monomial([("uC", i) for i in range(args.a)],
                    [("vB", j) for j in range(args.b)])
    ok_r = extract_coefficient(poly, right) == hc(kern, "r", uB, uC, vB, vC) / ff
    ok_l = extract_coefficient(poly, left) == hc(kern, "l", uC, uB, vC, vB) / ff
    print(f"extreme coefficient checks: right={ok_r} left={ok_l}")
    return 0 if ok_r and ok_l else 1


if __name__ == "__main__":
    raise SystemExit(main())
