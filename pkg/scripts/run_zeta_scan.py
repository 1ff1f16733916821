#!/usr/bin/env python3
"""Sliding-window scan of |zeta(1+it, alpha)| against its lower bounds.

Writes one CSV row per window and a JSON summary with the running minimum
and, at alpha = 1, the sharp small-window asymptotic for comparison.

Usage:
    python scripts/run_zeta_scan.py --alphas 0.3 0.5 1.0 --t-stop 1000 \
        --out scan.csv
"""

import argparse
import sys

from hardyseries import harness as hn


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.3, 0.5, 1.0])
    ap.add_argument("--delta", type=float, default=0.05)
    ap.add_argument("--t-start", type=float, default=0.0)
    ap.add_argument("--t-stop", type=float, default=1000.0)
    ap.add_argument("--t-step", type=float, default=0.025)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="hurwitz_scan.csv")
    args = ap.parse_args()

    cfg = hn.ExperimentConfig(
        "hurwitz_scan",
        alphas=tuple(args.alphas),
        deltas=(args.delta,),
        t_start=args.t_start,
        t_stop=args.t_stop,
        t_step=args.t_step,
        threads=args.threads,
        out=args.out,
    )
    result = hn.dispatch(cfg)
    print(f"{len(result.rows)} windows -> {args.out}")
    for key, val in result.summary.items():
        print(f"  {key}: {val}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
