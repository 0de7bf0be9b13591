#!/usr/bin/env python3
"""Run every identity suite and write one JSON report per suite.

Usage:
    python scripts/run_verification.py [--a-max 2] [--b-max 2] [--trials 5]
                                       [--seed 0] [--out-dir reports]
"""

import argparse
import json
import pathlib
import time

from qhc.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-max", type=int, default=2)
    ap.add_argument("--b-max", type=int, default=2)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", default="reports")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    total = {"pass": 0, "fail": 0, "error": 0}
    for suite in SUITES:
        if suite == "all":
            continue
        t0 = time.monotonic()
        report = run_suite(suite, a_max=args.a_max, b_max=args.b_max,
                           trials=args.trials, seed=args.seed)
        elapsed = time.monotonic() - t0
        path = out_dir / f"{suite}.json"
        path.write_text(json.dumps(report, indent=2) + "\n")
        s = report["summary"]
        for k in total:
            total[k] += s[k]
        print(f"{suite:12s} pass={s['pass']:5d} fail={s['fail']:3d} "
              f"error={s['error']:3d}  {elapsed:6.1f}s  -> {path}")
    print(f"{'total':12s} pass={total['pass']:5d} fail={total['fail']:3d} "
          f"error={total['error']:3d}")
    return 0 if total["fail"] == 0 and total["error"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
